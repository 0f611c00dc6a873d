//! The canonical subcommand → library-operation map, kept as data so a test
//! can hold two invariants: the table names exactly the subcommands the
//! parser exposes, and every library operation is wired to exactly one
//! subcommand.

pub struct Entry {
    pub subcommand: &'static str,
    pub operations: &'static [&'static str],
}

pub const DISPATCH: &[Entry] = &[
    Entry { subcommand: "lattice validate", operations: &["LatticeSpec::validate"] },
    Entry { subcommand: "lattice classify", operations: &["LatticeSpec::classify"] },
    Entry { subcommand: "op apply", operations: &["apply_induced", "OperatorTable::apply"] },
    Entry {
        subcommand: "op galois",
        operations: &[
            "verify_galois",
            "strong_adjoint_check",
            "conjugate_check",
            "boolean_criterion_check",
        ],
    },
    Entry { subcommand: "op classify", operations: &["classify_mapping"] },
    Entry { subcommand: "op adjoint", operations: &["compute_adjoint"] },
    Entry { subcommand: "op recover", operations: &["recover_relation"] },
    Entry {
        subcommand: "op decompose",
        operations: &["closure_interior_check", "decompose_operator"],
    },
    Entry { subcommand: "fca concepts", operations: &["enumerate_concepts"] },
    Entry { subcommand: "fca export", operations: &["ConceptSet::to_dot"] },
    Entry { subcommand: "tense check", operations: &["tense_from_frame", "check_axioms"] },
    Entry { subcommand: "tense correspondence", operations: &["frame_correspondence"] },
    Entry {
        subcommand: "monadic check",
        operations: &["monadic_from_equivalence", "check_monadic"],
    },
    Entry { subcommand: "monadic bridge", operations: &["monadic_tense_bridge"] },
];
