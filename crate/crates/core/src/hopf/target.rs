//! `∨_X`-algebras as codomains, and the morphism out of the tree algebra.

use std::collections::BTreeMap;

use super::verify::{mismatch, Check};
use crate::coalgebra::{coproduct_rec, counit};
use crate::error::{Error, Result};
use crate::freemod::{Coeff, LinComb, TensorComb};
use crate::product::{star, vee};
use crate::tree::{enumerate, Alphabet, Label, Tree};

/// An algebra with one binary operation per label.
///
/// `graft_op` fails with [`Error::UnknownLabel`] for labels the target does
/// not interpret.
pub trait VAlgebraTarget {
    type Element: Clone;

    fn unit(&self) -> Self::Element;
    fn mul(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn graft_op(
        &self,
        alpha: &Label,
        x: &Self::Element,
        y: &Self::Element,
    ) -> Result<Self::Element>;
    fn eq(&self, x: &Self::Element, y: &Self::Element) -> bool;
}

/// Targets whose elements form a module, so the morphism extends linearly.
pub trait LinearTarget: VAlgebraTarget {
    fn zero(&self) -> Self::Element;
    fn add(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn scale(&self, c: &Coeff, x: &Self::Element) -> Self::Element;
}

/// The tree algebra itself with `∗` and `∨_α` for `α` in a fixed alphabet.
#[derive(Clone, Debug)]
pub struct SelfTarget {
    pub alphabet: Alphabet,
}

impl SelfTarget {
    pub fn new(alphabet: Alphabet) -> Self {
        SelfTarget { alphabet }
    }
}

impl VAlgebraTarget for SelfTarget {
    type Element = LinComb;

    fn unit(&self) -> LinComb {
        LinComb::one()
    }

    fn mul(&self, x: &LinComb, y: &LinComb) -> LinComb {
        star(x, y)
    }

    fn graft_op(&self, alpha: &Label, x: &LinComb, y: &LinComb) -> Result<LinComb> {
        if !self.alphabet.contains(alpha) {
            return Err(Error::UnknownLabel(alpha.clone()));
        }
        Ok(vee(alpha, x, y))
    }

    fn eq(&self, x: &LinComb, y: &LinComb) -> bool {
        x == y
    }
}

impl LinearTarget for SelfTarget {
    fn zero(&self) -> LinComb {
        LinComb::zero()
    }

    fn add(&self, x: &LinComb, y: &LinComb) -> LinComb {
        x + y
    }

    fn scale(&self, c: &Coeff, x: &LinComb) -> LinComb {
        x.scale(c)
    }
}

/// Trees over another alphabet, with `α` acting as `∨_{f(α)}`.
#[derive(Clone, Debug)]
pub struct RelabelTarget {
    map: BTreeMap<Label, Label>,
}

impl RelabelTarget {
    pub fn new(map: impl IntoIterator<Item = (Label, Label)>) -> Self {
        RelabelTarget {
            map: map.into_iter().collect(),
        }
    }

    /// Sends every label of `from` to `to`.
    pub fn collapse(from: &Alphabet, to: Label) -> Self {
        RelabelTarget::new(from.iter().map(|a| (a.clone(), to.clone())))
    }

    pub fn image(&self, alpha: &Label) -> Result<&Label> {
        self.map
            .get(alpha)
            .ok_or_else(|| Error::UnknownLabel(alpha.clone()))
    }

    /// Relabels a tree directly, without going through the target operations.
    pub fn relabel(&self, t: &Tree) -> Result<Tree> {
        t.map_labels(&mut |a: &Label| self.image(a).cloned())
    }
}

impl VAlgebraTarget for RelabelTarget {
    type Element = LinComb;

    fn unit(&self) -> LinComb {
        LinComb::one()
    }

    fn mul(&self, x: &LinComb, y: &LinComb) -> LinComb {
        star(x, y)
    }

    fn graft_op(&self, alpha: &Label, x: &LinComb, y: &LinComb) -> Result<LinComb> {
        Ok(vee(self.image(alpha)?, x, y))
    }

    fn eq(&self, x: &LinComb, y: &LinComb) -> bool {
        x == y
    }
}

impl LinearTarget for RelabelTarget {
    fn zero(&self) -> LinComb {
        LinComb::zero()
    }

    fn add(&self, x: &LinComb, y: &LinComb) -> LinComb {
        x + y
    }

    fn scale(&self, c: &Coeff, x: &LinComb) -> LinComb {
        x.scale(c)
    }
}

/// The map `φ̄` with `φ̄(|) = 1` and `φ̄(T₁ ∨_α T₂) = φ̄(T₁) ∨_α φ̄(T₂)`.
pub struct UniversalMorphism<'a, T: VAlgebraTarget> {
    target: &'a T,
}

/// Builds `φ̄` into `target`, checking that every label of `alphabet` has an
/// operation there.
pub fn universal_morphism<'a, T: VAlgebraTarget>(
    target: &'a T,
    alphabet: &Alphabet,
) -> Result<UniversalMorphism<'a, T>> {
    let one = target.unit();
    for alpha in alphabet {
        target.graft_op(alpha, &one, &one)?;
    }
    Ok(UniversalMorphism { target })
}

impl<T: VAlgebraTarget> UniversalMorphism<'_, T> {
    pub fn target(&self) -> &T {
        self.target
    }

    pub fn apply_tree(&self, t: &Tree) -> Result<T::Element> {
        match t.decompose() {
            Err(_) => Ok(self.target.unit()),
            Ok((l, alpha, r)) => {
                let l = self.apply_tree(l)?;
                let r = self.apply_tree(r)?;
                self.target.graft_op(alpha, &l, &r)
            }
        }
    }
}

impl<T: LinearTarget> UniversalMorphism<'_, T> {
    pub fn apply(&self, x: &LinComb) -> Result<T::Element> {
        let mut out = self.target.zero();
        for (t, c) in x.iter() {
            let image = self.target.scale(c, &self.apply_tree(t)?);
            out = self.target.add(&out, &image);
        }
        Ok(out)
    }
}

/// Both sides of the `∨_X`-algebra identity in `target` for
/// `a = a₁ ∨_α a₂` and `a' = b₁ ∨_β b₂`:
/// `a a'` and `a₁ ∨_α (a₂ a') + (a b₁) ∨_β b₂`.
pub fn vee_identity_sides<T: LinearTarget>(
    target: &T,
    (a1, alpha, a2): (&T::Element, &Label, &T::Element),
    (b1, beta, b2): (&T::Element, &Label, &T::Element),
) -> Result<(T::Element, T::Element)> {
    let a = target.graft_op(alpha, a1, a2)?;
    let b = target.graft_op(beta, b1, b2)?;
    let lhs = target.mul(&a, &b);
    let first = target.graft_op(alpha, a1, &target.mul(a2, &b))?;
    let second = target.graft_op(beta, &target.mul(&a, b1), b2)?;
    Ok((lhs, target.add(&first, &second)))
}

/// Checks that `φ̄` into a tree-valued target is a `∨_X`-bialgebra morphism on
/// every basis tree (or pair) within `degree_bound`: unit, `∗`, each `∨_α`,
/// `Δ` and `ε`, plus the `∨_X`-identity on the images.
pub fn check_morphism<T>(
    phi: &UniversalMorphism<'_, T>,
    degree_bound: usize,
    alphabet: &Alphabet,
) -> Result<Vec<Check>>
where
    T: LinearTarget<Element = LinComb>,
{
    let target = phi.target();
    let trees: Vec<Tree> = (0..=degree_bound)
        .map(|n| enumerate(n, alphabet))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let pairs: Vec<(&Tree, &Tree)> = trees
        .iter()
        .flat_map(|s| trees.iter().map(move |u| (s, u)))
        .filter(|(s, u)| s.degree() + u.degree() <= degree_bound)
        .collect();
    let image = |t: &Tree| phi.apply_tree(t);
    let mut checks = Vec::new();

    let unit = mismatch(
        vec![Tree::Leaf.to_string()],
        &image(&Tree::Leaf)?,
        &target.unit(),
    );
    checks.push(Check::new("morphism_unit", unit));

    let mut found = None;
    for (s, u) in &pairs {
        let lhs = phi.apply(&crate::product::star_basis(s, u))?;
        let rhs = target.mul(&image(s)?, &image(u)?);
        found = mismatch(vec![s.to_string(), u.to_string()], &lhs, &rhs);
        if found.is_some() {
            break;
        }
    }
    checks.push(Check::new("morphism_product", found));

    let mut found = None;
    'vee: for alpha in alphabet {
        for (s, u) in pairs
            .iter()
            .filter(|(s, u)| s.degree() + u.degree() < degree_bound)
        {
            let lhs = image(&Tree::graft((*s).clone(), alpha.clone(), (*u).clone()))?;
            let rhs = target.graft_op(alpha, &image(s)?, &image(u)?)?;
            found = mismatch(
                vec![alpha.to_string(), s.to_string(), u.to_string()],
                &lhs,
                &rhs,
            );
            if found.is_some() {
                break 'vee;
            }
        }
    }
    checks.push(Check::new("morphism_vee", found));

    let mut found = None;
    for t in &trees {
        let lhs = image(t)?.flat_map(|x| (*coproduct_rec(x)).clone());
        let mut rhs = TensorComb::zero();
        for ((a, b), c) in coproduct_rec(t).iter() {
            rhs.add_scaled(c, &image(a)?.tensor(&image(b)?));
        }
        found = mismatch(vec![t.to_string()], &lhs, &rhs);
        if found.is_some() {
            break;
        }
    }
    checks.push(Check::new("morphism_coproduct", found));

    let mut found = None;
    for t in &trees {
        let lhs = LinComb::one().scale(&counit(&image(t)?));
        let rhs = LinComb::one().scale(&counit(&LinComb::from(t.clone())));
        found = mismatch(vec![t.to_string()], &lhs, &rhs);
        if found.is_some() {
            break;
        }
    }
    checks.push(Check::new("morphism_counit", found));

    let mut found = None;
    'id: for (s, u) in &pairs {
        let (Ok((a1, alpha, a2)), Ok((b1, beta, b2))) = (s.decompose(), u.decompose()) else {
            continue;
        };
        let (x1, x2, y1, y2) = (image(a1)?, image(a2)?, image(b1)?, image(b2)?);
        let (lhs, rhs) = vee_identity_sides(target, (&x1, alpha, &x2), (&y1, beta, &y2))?;
        found = mismatch(vec![s.to_string(), u.to_string()], &lhs, &rhs);
        if found.is_some() {
            break 'id;
        }
    }
    checks.push(Check::new("target_vee_algebra_identity", found));

    Ok(checks)
}
