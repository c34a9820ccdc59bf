//! Finite formal sums with exact integer coefficients.
//!
//! [`Combination<K>`] is the free ℤ-module on an ordered basis `K`. The
//! aliases fix the bases used throughout the crate: single trees
//! ([`LinComb`]), ordered pairs ([`TensorComb`], elements of `H ⊗ H`) and
//! triples/quadruples for coassociativity and the `τ₂₃` reshuffle.
//!
//! Zero coefficients are never stored, so derived equality is equality of
//! elements.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::tree::Tree;

pub type Coeff = BigInt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

/// Element of `H_LR(X)`.
pub type LinComb = Combination<Tree>;
/// Element of `H ⊗ H`.
pub type TensorComb = Combination<(Tree, Tree)>;
/// Element of `H^{⊗3}`.
pub type Tensor3 = Combination<[Tree; 3]>;
/// Element of `H^{⊗4}`.
pub type Tensor4 = Combination<[Tree; 4]>;

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(Coeff::one(), key)
    }

    pub fn term(coeff: impl Into<Coeff>, key: K) -> Self {
        let mut out = Self::zero();
        out.add_term(coeff, key);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coeff> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coeff> {
        self.terms.keys()
    }

    /// Adds `coeff · key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, coeff: impl Into<Coeff>, key: K) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `coeff · other` in place.
    pub fn add_scaled(&mut self, coeff: &Coeff, other: &Self) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(coeff * c, k.clone());
        }
    }

    pub fn scale(&self, coeff: &Coeff) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    /// Linear extension of a basis map `f: K -> Combination<L>`.
    pub fn flat_map<L, F>(&self, mut f: F) -> Combination<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Combination<L>,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Linear extension of a basis map `f: K -> L`.
    pub fn map_basis<L, F>(&self, mut f: F) -> Combination<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> L,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(c.clone(), f(k));
        }
        out
    }

    /// Keeps the terms whose basis element satisfies `pred`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut pred: F) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Coeff {
        self.terms.values().sum()
    }
}

impl<K: Ord + Clone> FromIterator<(Coeff, K)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (Coeff, K)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, k) in iter {
            out.add_term(c, k);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        self.add_scaled(&Coeff::one(), rhs);
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        self.add_scaled(&-Coeff::one(), rhs);
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;

    fn add(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;

    fn add(mut self, rhs: Self) -> Combination<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;

    fn sub(mut self, rhs: Self) -> Combination<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;

    fn neg(mut self) -> Combination<K> {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        -self.clone()
    }
}

impl From<Tree> for LinComb {
    fn from(t: Tree) -> Self {
        LinComb::basis(t)
    }
}

impl LinComb {
    /// The unit `|`.
    pub fn one() -> Self {
        LinComb::basis(Tree::Leaf)
    }

    /// Restriction to trees with `n` internal vertices.
    pub fn graded_component(&self, n: usize) -> LinComb {
        self.filter(|t| t.interior_count() == n)
    }

    /// Degrees that occur in the support, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.keys().map(Tree::interior_count).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// True when every term has degree `n` (vacuously true for zero).
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.keys().all(|t| t.interior_count() == n)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &LinComb) -> TensorComb {
        let mut out = TensorComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(ca * cb, (a.clone(), b.clone()));
            }
        }
        out
    }
}

impl TensorComb {
    /// `self ⊗ other` in `H^{⊗4}`.
    pub fn tensor(&self, other: &TensorComb) -> Tensor4 {
        let mut out = Tensor4::zero();
        for ((a, b), cx) in self.iter() {
            for ((c, d), cy) in other.iter() {
                out.add_term(cx * cy, [a.clone(), b.clone(), c.clone(), d.clone()]);
            }
        }
        out
    }

    /// Terms in display order: by right leg, then left leg.
    ///
    /// This lists `T ⊗ |` before `| ⊗ T`, the order in which coproducts are
    /// conventionally written.
    pub fn display_terms(&self) -> Vec<(&(Tree, Tree), &Coeff)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|((l1, r1), _), ((l2, r2), _)| r1.cmp(r2).then_with(|| l1.cmp(l2)));
        v
    }
}

/// Swaps the second and third tensor factors of every summand.
pub fn tau23(w: &Tensor4) -> Tensor4 {
    w.map_basis(|[a, b, c, d]| [a.clone(), c.clone(), b.clone(), d.clone()])
}

fn write_coeff_prefix(f: &mut fmt::Formatter<'_>, first: bool, c: &Coeff) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    let abs = c.abs();
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    Ok(())
}

/// Canonical text: `2*(|^a |) - |`, `0` for the zero element.
impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            write_coeff_prefix(f, i == 0, c)?;
            f.write_str(t.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

/// Canonical text with `(x)` as tensor sign, e.g. `(|^a |) (x) | + | (x) (|^a |)`.
impl fmt::Display for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.display_terms().into_iter().enumerate() {
            write_coeff_prefix(f, i == 0, c)?;
            write!(f, "{l} (x) {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorComb({self})")
    }
}

impl<const N: usize> fmt::Display for Combination<[Tree; N]> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (legs, c)) in self.iter().enumerate() {
            write_coeff_prefix(f, i == 0, c)?;
            for (j, t) in legs.iter().enumerate() {
                if j > 0 {
                    f.write_str(" (x) ")?;
                }
                f.write_str(t.as_str())?;
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Combination<[Tree; N]> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{N}({self})")
    }
}

// JSON: arrays of {"coeff": "<decimal>", ...} sorted in canonical order.

#[derive(Serialize, Deserialize)]
struct LinTerm {
    coeff: String,
    tree: Tree,
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    coeff: String,
    left: Tree,
    right: Tree,
}

fn parse_coeff<E: de::Error>(s: &str) -> Result<Coeff, E> {
    s.parse::<Coeff>()
        .map_err(|_| E::custom(format!("invalid decimal coefficient {s:?}")))
}

impl Serialize for LinComb {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (t, c) in self.iter() {
            seq.serialize_element(&LinTerm {
                coeff: c.to_string(),
                tree: t.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LinComb {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<LinTerm>::deserialize(deserializer)?;
        let mut out = LinComb::zero();
        for t in terms {
            out.add_term(parse_coeff::<D::Error>(&t.coeff)?, t.tree);
        }
        Ok(out)
    }
}

impl Serialize for TensorComb {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for ((l, r), c) in self.display_terms() {
            seq.serialize_element(&TensorTerm {
                coeff: c.to_string(),
                left: l.clone(),
                right: r.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TensorComb {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TensorTerm>::deserialize(deserializer)?;
        let mut out = TensorComb::zero();
        for t in terms {
            out.add_term(parse_coeff::<D::Error>(&t.coeff)?, (t.left, t.right));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Label, Tree};
    use proptest::prelude::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn module_basics() {
        let a = LinComb::from(t("(|^a |)"));
        assert!((&a + &(-&a)).is_zero());
        assert!(a.scale(&Coeff::zero()).is_zero());
        let five = a.scale(&2.into()) + a.scale(&3.into());
        assert_eq!(five, LinComb::term(5, t("(|^a |)")));
    }

    #[test]
    fn graded_components() {
        assert_eq!(LinComb::one().graded_component(0), LinComb::one());
        assert!(LinComb::one().graded_component(1).is_zero());
        let t1 = t("(|^a |)");
        let t2 = t("((|^a |)^b |)");
        let x = LinComb::from(t1.clone()) + LinComb::from(t2);
        assert_eq!(x.graded_component(1), LinComb::from(t1));
        assert_eq!(x.degrees(), vec![1, 2]);
    }

    #[test]
    fn tau23_examples() {
        let [a, b, c, d] = ["|", "(|^a |)", "(|^b |)", "(|^c |)"].map(t);
        let w = Tensor4::basis([a.clone(), b.clone(), c.clone(), d.clone()]);
        assert_eq!(
            tau23(&w),
            Tensor4::basis([a.clone(), c.clone(), b.clone(), d.clone()])
        );
        assert_eq!(tau23(&tau23(&w)), w);
        let v = Tensor4::term(3, [d.clone(), c.clone(), b.clone(), a.clone()]);
        assert_eq!(tau23(&(&w + &v)), &tau23(&w) + &tau23(&v));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(LinComb::zero().to_string(), "0");
        let x: LinComb = [
            (Coeff::from(1), t("((|^a |)^b |)")),
            (Coeff::from(-2), t("|")),
            (Coeff::from(1), t("(|^a (|^b |))")),
        ]
        .into_iter()
        .collect();
        assert_eq!(x.to_string(), "-2*| + (|^a (|^b |)) + ((|^a |)^b |)");
        let one = t("(|^a |)");
        let d = TensorComb::basis((one.clone(), Tree::Leaf)) + TensorComb::basis((Tree::Leaf, one));
        assert_eq!(d.to_string(), "(|^a |) (x) | + | (x) (|^a |)");
    }

    #[test]
    fn json_schema() {
        let x = LinComb::term(-3, t("(|^a |)"));
        assert_eq!(
            serde_json::to_value(&x).unwrap(),
            serde_json::json!([{"coeff": "-3", "tree": {"l": "leaf", "a": "a", "r": "leaf"}}])
        );
        let y = TensorComb::term(2, (Tree::Leaf, Tree::Leaf));
        assert_eq!(
            serde_json::to_value(&y).unwrap(),
            serde_json::json!([{"coeff": "2", "left": "leaf", "right": "leaf"}])
        );
        assert!(serde_json::from_str::<LinComb>(r#"[{"coeff": "x", "tree": "leaf"}]"#).is_err());
    }

    fn arb_lincomb() -> impl Strategy<Value = LinComb> {
        let trees: Vec<Tree> =
            crate::tree::enumerate(3, &crate::tree::Alphabet::parse_list("a,b").unwrap())
                .unwrap()
                .into_iter()
                .chain([Tree::Leaf, Tree::single(Label::new("a").unwrap())])
                .collect();
        prop::collection::vec((-5i64..=5, prop::sample::select(trees)), 0..8)
            .prop_map(|v| v.into_iter().map(|(c, t)| (Coeff::from(c), t)).collect())
    }

    proptest! {
        #[test]
        fn abelian_group_laws(x in arb_lincomb(), y in arb_lincomb(), z in arb_lincomb()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert!((&x - &x).is_zero());
            prop_assert!(x.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn scaling_distributes(x in arb_lincomb(), y in arb_lincomb(), c in -4i64..=4) {
            let c = Coeff::from(c);
            prop_assert_eq!((&x + &y).scale(&c), x.scale(&c) + y.scale(&c));
        }

        #[test]
        fn graded_component_is_a_projection(x in arb_lincomb()) {
            let mut sum = LinComb::zero();
            for n in 0..=4 {
                let p = x.graded_component(n);
                prop_assert_eq!(p.graded_component(n), p.clone());
                for m in 0..=4 {
                    if m != n {
                        prop_assert!(p.graded_component(m).is_zero());
                    }
                }
                sum += &p;
            }
            prop_assert_eq!(sum, x);
        }

        #[test]
        fn json_round_trip(x in arb_lincomb()) {
            let s = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<LinComb>(&s).unwrap(), x);
        }
    }
}
