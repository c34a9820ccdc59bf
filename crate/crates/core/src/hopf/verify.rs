//! Exhaustive checks of the Hopf algebra axioms over all basis trees up to a
//! degree bound.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::target::{vee_identity_sides, SelfTarget};
use super::{
    antipode, cocycle_sides, coideal_violation, convolution_left, convolution_right, unit_counit,
};
use crate::coalgebra::{
    coproduct_cuts, coproduct_left, coproduct_rec, coproduct_right, counit_left, counit_right,
    tensor_star,
};
use crate::error::Result;
use crate::freemod::{Combination, LinComb};
use crate::product::{star, star_basis};
use crate::tree::{enumerate, Alphabet, Label, Tree};

/// A failing input together with both sides and `lhs − rhs`, all in canonical
/// text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn new(name: &str, counterexample: Option<Counterexample>) -> Self {
        Check {
            name: name.to_string(),
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub degree_bound: usize,
    pub alphabet: Vec<Label>,
    pub checks: Vec<Check>,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.alphabet.iter().map(Label::as_str).collect();
        writeln!(
            f,
            "degree bound {} over {{{}}}",
            self.degree_bound,
            labels.join(",")
        )?;
        for c in &self.checks {
            writeln!(f, "{:<28} {}", c.name, if c.pass { "pass" } else { "FAIL" })?;
            if let Some(cx) = &c.counterexample {
                writeln!(f, "  input: {}", cx.input.join(" ; "))?;
                writeln!(f, "  lhs:   {}", cx.lhs)?;
                writeln!(f, "  rhs:   {}", cx.rhs)?;
                writeln!(f, "  diff:  {}", cx.difference)?;
            }
        }
        Ok(())
    }
}

/// `None` when the two sides agree, otherwise a counterexample.
pub(crate) fn mismatch<K>(
    input: Vec<String>,
    lhs: &Combination<K>,
    rhs: &Combination<K>,
) -> Option<Counterexample>
where
    K: Ord + Clone,
    Combination<K>: fmt::Display,
{
    (lhs != rhs).then(|| Counterexample {
        input,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: (lhs - rhs).to_string(),
    })
}

/// First counterexample in input order, whatever the scheduling.
fn sweep<I, F>(inputs: &[I], f: F) -> Option<Counterexample>
where
    I: Sync,
    F: Fn(&I) -> Option<Counterexample> + Sync + Send,
{
    inputs.par_iter().find_map_first(f)
}

fn text(trees: &[&Tree]) -> Vec<String> {
    trees.iter().map(|t| t.to_string()).collect()
}

/// Runs every axiom check over all basis trees of degree at most
/// `degree_bound` (pairs and triples by total degree).
pub fn verify_hopf(degree_bound: usize, alphabet: &Alphabet) -> Result<HopfReport> {
    let trees: Vec<Tree> = (0..=degree_bound)
        .map(|n| enumerate(n, alphabet))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let pairs: Vec<(&Tree, &Tree)> = trees
        .iter()
        .flat_map(|s| trees.iter().map(move |u| (s, u)))
        .filter(|(s, u)| s.degree() + u.degree() <= degree_bound)
        .collect();
    let triples: Vec<(&Tree, &Tree, &Tree)> = pairs
        .iter()
        .flat_map(|&(a, b)| trees.iter().map(move |c| (a, b, c)))
        .filter(|(a, b, c)| a.degree() + b.degree() + c.degree() <= degree_bound)
        .collect();
    let labelled_pairs: Vec<(&Label, &Tree, &Tree)> = alphabet
        .iter()
        .flat_map(|alpha| pairs.iter().map(move |&(x, y)| (alpha, x, y)))
        .collect();
    let labelled_trees: Vec<(&Label, &Tree)> = alphabet
        .iter()
        .flat_map(|alpha| trees.iter().map(move |t| (alpha, t)))
        .collect();
    let one = |t: &Tree| LinComb::from(t.clone());
    let self_target = SelfTarget::new(alphabet.clone());

    let checks = vec![
        Check::new(
            "associativity",
            sweep(&triples, |&(a, b, c)| {
                let l = star(&star_basis(a, b), &one(c));
                let r = star(&one(a), &star_basis(b, c));
                mismatch(text(&[a, b, c]), &l, &r)
            }),
        ),
        Check::new(
            "unit",
            sweep(&trees, |t| {
                let l = star(&LinComb::one(), &one(t));
                let r = star(&one(t), &LinComb::one());
                mismatch(text(&[t]), &l, &one(t)).or_else(|| mismatch(text(&[t]), &r, &one(t)))
            }),
        ),
        Check::new(
            "coassociativity",
            sweep(&trees, |t| {
                let d = coproduct_rec(t);
                mismatch(text(&[t]), &coproduct_left(&d), &coproduct_right(&d))
            }),
        ),
        Check::new(
            "counit",
            sweep(&trees, |t| {
                let d = coproduct_rec(t);
                mismatch(text(&[t]), &counit_left(&d), &one(t))
                    .or_else(|| mismatch(text(&[t]), &counit_right(&d), &one(t)))
            }),
        ),
        Check::new(
            "multiplicativity",
            sweep(&pairs, |&(s, u)| {
                let l = star_basis(s, u).flat_map(|x| (*coproduct_rec(x)).clone());
                let r = tensor_star(&coproduct_rec(s), &coproduct_rec(u));
                mismatch(text(&[s, u]), &l, &r)
            }),
        ),
        Check::new(
            "grading_product",
            sweep(&pairs, |&(s, u)| {
                let p = star_basis(s, u);
                let n = s.degree() + u.degree();
                mismatch(text(&[s, u]), &p, &p.graded_component(n))
            }),
        ),
        Check::new(
            "grading_coproduct",
            sweep(&trees, |t| {
                let d = coproduct_rec(t);
                let graded = d.filter(|(p, r)| p.degree() + r.degree() == t.degree());
                mismatch(text(&[t]), &d, &graded)
            }),
        ),
        Check::new(
            "antipode_left",
            sweep(&trees, |t| {
                mismatch(text(&[t]), &convolution_left(t), &unit_counit(t))
            }),
        ),
        Check::new(
            "antipode_right",
            sweep(&trees, |t| {
                mismatch(text(&[t]), &convolution_right(t), &unit_counit(t))
            }),
        ),
        Check::new(
            "antipode_grading",
            sweep(&trees, |t| {
                let s = antipode(t);
                mismatch(text(&[t]), &s, &s.graded_component(t.degree()))
            }),
        ),
        Check::new(
            "coproduct_oracle",
            sweep(&trees, |t| {
                mismatch(text(&[t]), &coproduct_rec(t), &coproduct_cuts(t))
            }),
        ),
        Check::new(
            "vee_algebra_identity",
            sweep(&pairs, |&(s, u)| {
                let (Ok((a1, alpha, a2)), Ok((b1, beta, b2))) = (s.decompose(), u.decompose())
                else {
                    return None;
                };
                let sides = vee_identity_sides(
                    &self_target,
                    (&one(a1), alpha, &one(a2)),
                    (&one(b1), beta, &one(b2)),
                );
                let (l, r) = sides.expect("labels come from the alphabet");
                mismatch(text(&[s, u]), &l, &r)
            }),
        ),
        Check::new(
            "cocycle",
            sweep(&labelled_pairs, |&(alpha, x, y)| {
                let (l, r) = cocycle_sides(alpha, &one(x), &one(y));
                let mut input = vec![alpha.to_string()];
                input.extend(text(&[x, y]));
                mismatch(input, &l, &r)
            }),
        ),
        Check::new(
            "coideal",
            sweep(&labelled_trees, |&(alpha, t)| {
                let bad = coideal_violation(alpha, t)?;
                Some(Counterexample {
                    input: vec![alpha.to_string(), t.to_string()],
                    lhs: format!("{} (x) {}", bad.0, bad.1),
                    rhs: format!("second leg rooted at {alpha}"),
                    difference: format!("{} (x) {}", bad.0, bad.1),
                })
            }),
        ),
    ];

    Ok(HopfReport {
        degree_bound,
        alphabet: alphabet.labels().to_vec(),
        checks,
    })
}
