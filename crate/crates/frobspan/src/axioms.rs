//! Executable axiom suite for commutative Frobenius objects.
//!
//! Each axiom is a family of terms that must share a normal form. Under
//! homotopy composition all seven commutative-Frobenius axioms hold and the
//! special axiom (`comult ; mult = id`) fails; under strict composition the
//! special axiom holds as well.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cospan::Semantics;
use crate::normal::{normalize, NormalCospan};
use crate::termlang::{parse, FrobTerm};

#[derive(Debug, Clone)]
pub struct Axiom {
    pub name: &'static str,
    /// All members must be equal; the list has at least two entries.
    pub terms: Vec<FrobTerm>,
}

impl Axiom {
    fn new(name: &'static str, sources: &[&str]) -> Self {
        Axiom {
            name,
            terms: sources
                .iter()
                .map(|s| parse(s).expect("axiom terms are well-formed"))
                .collect(),
        }
    }

    /// Check the axiom under the given semantics, on the raw terms and
    /// (for `whiskers > 0`) under random tensoring with identities on both
    /// sides.
    pub fn holds(&self, semantics: Semantics, whiskers: usize, rng: &mut impl Rng) -> bool {
        if !self.holds_plain(semantics) {
            return false;
        }
        for _ in 0..whiskers {
            let left = rng.gen_range(0..=2);
            let right = rng.gen_range(0..=2);
            let forms: Vec<NormalCospan> = self
                .terms
                .iter()
                .map(|t| {
                    let whiskered = FrobTerm::par(
                        FrobTerm::par(FrobTerm::Id(left), t.clone()),
                        FrobTerm::Id(right),
                    );
                    normalize(&whiskered.compile(semantics).expect("axiom terms compile"))
                })
                .collect();
            if forms.windows(2).any(|w| w[0] != w[1]) {
                return false;
            }
        }
        true
    }

    pub fn holds_plain(&self, semantics: Semantics) -> bool {
        let forms: Vec<NormalCospan> = self
            .terms
            .iter()
            .map(|t| normalize(&t.compile(semantics).expect("axiom terms compile")))
            .collect();
        forms.windows(2).all(|w| w[0] == w[1])
    }
}

/// The seven axioms of a commutative Frobenius object.
pub fn frobenius_axioms() -> Vec<Axiom> {
    vec![
        Axiom::new(
            "associativity",
            &["(mult * id1) ; mult", "(id1 * mult) ; mult"],
        ),
        Axiom::new(
            "unitality",
            &["(unit * id1) ; mult", "id1", "(id1 * unit) ; mult"],
        ),
        Axiom::new(
            "coassociativity",
            &["comult ; (comult * id1)", "comult ; (id1 * comult)"],
        ),
        Axiom::new(
            "counitality",
            &["comult ; (counit * id1)", "id1", "comult ; (id1 * counit)"],
        ),
        Axiom::new("commutativity", &["swap ; mult", "mult"]),
        Axiom::new("cocommutativity", &["comult ; swap", "comult"]),
        Axiom::new(
            "frobenius",
            &[
                "(comult * id1) ; (id1 * mult)",
                "mult ; comult",
                "(id1 * comult) ; (mult * id1)",
            ],
        ),
    ]
}

/// The special axiom, which distinguishes the two composition semantics.
pub fn special_axiom() -> Axiom {
    Axiom::new("special", &["comult ; mult", "id1"])
}

/// Outcome of running the full suite under one semantics.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub lines: Vec<String>,
    /// True when the observed pattern matches the expected one for the
    /// semantics: all Frobenius axioms pass, and the special axiom fails
    /// exactly under homotopy composition.
    pub as_expected: bool,
}

impl AxiomReport {
    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Run all axioms with `whiskers` random identity-whiskered instantiations
/// each, seeded for reproducibility.
pub fn run_axiom_suite(semantics: Semantics, seed: u64, whiskers: usize) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut as_expected = true;
    for axiom in frobenius_axioms() {
        let ok = axiom.holds(semantics, whiskers, &mut rng);
        lines.push(format!(
            "{} {}",
            if ok { "PASS" } else { "FAIL" },
            axiom.name
        ));
        as_expected &= ok;
    }
    let special = special_axiom();
    let special_ok = special.holds(semantics, whiskers, &mut rng);
    lines.push(format!(
        "{} {}",
        if special_ok { "PASS" } else { "FAIL" },
        special.name
    ));
    let special_expected = matches!(semantics, Semantics::Strict);
    as_expected &= special_ok == special_expected;
    AxiomReport { lines, as_expected }
}
