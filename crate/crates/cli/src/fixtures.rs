//! Fixture documents shipped with the tool, addressed as `fixture:<name>`.

use crate::error::{CliError, CliResult};

/// `(name, description, document)`.
pub const FIXTURES: &[(&str, &str, &str)] = &[
    ("fix-2dim-a", "two-dimensional algebra e1e2 = e1, e2e2 = e2 with α(e2) = e1", include_str!("../fixtures/fix-2dim-a.json")),
    ("fix-2dim-b", "the same algebra with α(e2) = e2", include_str!("../fixtures/fix-2dim-b.json")),
    ("fix-2dim-bad", "the same algebra with α(e1) = e1, which is not averaging", include_str!("../fixtures/fix-2dim-bad.json")),
    ("fix-2dim-c1", "the same algebra with α(e2) = e2 + e1", include_str!("../fixtures/fix-2dim-c1.json")),
    ("fix-2dim-c2", "the same algebra with α(e2) = e2 + 2e1", include_str!("../fixtures/fix-2dim-c2.json")),
    ("fix-2dim-d", "the same algebra with α = id", include_str!("../fixtures/fix-2dim-d.json")),
    ("fix-a3", "three-dimensional averaging algebra with β and r = e2⊗e3 − e3⊗e2", include_str!("../fixtures/fix-a3.json")),
    ("fix-a3-sym", "the same algebra with r = e3⊗e3", include_str!("../fixtures/fix-a3-sym.json")),
    ("fix-bad311i", "two-dimensional quadruple whose β is not averaging on the coalgebra", include_str!("../fixtures/fix-bad311i.json")),
    ("fix-bia2", "two-dimensional commutative cocommutative averaging ASI bialgebra", include_str!("../fixtures/fix-bia2.json")),
    ("fix-c3", "three-dimensional commutative averaging algebra, β = 0, r = e2⊗e3 − e3⊗e2", include_str!("../fixtures/fix-c3.json")),
    ("fix-c3-sym", "the same algebra with r = e3⊗e3", include_str!("../fixtures/fix-c3-sym.json")),
    ("fix-double6", "printed table of the six-dimensional double, for diffing", include_str!("../fixtures/fix-double6.json")),
    ("fix-perm3", "three-dimensional algebra with the printed operators, perm table and a quadratic pre-Lie section", include_str!("../fixtures/fix-perm3.json")),
    ("fix-prelie2", "two-dimensional quadratic pre-Lie algebra", include_str!("../fixtures/fix-prelie2.json")),
];

pub fn get(name: &str) -> CliResult<&'static str> {
    FIXTURES.iter().find(|f| f.0 == name).map(|f| f.2).ok_or_else(|| {
        let names: Vec<&str> = FIXTURES.iter().map(|f| f.0).collect();
        CliError::input(format!("unknown fixture `{name}`; available: {}", names.join(", ")))
    })
}
