//! Primitive elements of a fixed degree, as the kernel of the reduced coproduct.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::reduced_coproduct;
use crate::error::Result;
use crate::freemod::LinComb;
use crate::linalg;
use crate::tree::{enumerate, Alphabet, Tree};

/// Column trees, row tensors and the integer matrix between them.
pub type CoproductMatrix = (Vec<Tree>, Vec<(Tree, Tree)>, Vec<Vec<BigInt>>);

/// Matrix of `Δ̃` on the degree-`n` trees.
///
/// Columns are the trees of degree `n` in canonical order; rows are the tensor
/// basis elements that occur in some `Δ̃(t)`, also in canonical order.
pub fn reduced_coproduct_matrix(n: usize, alphabet: &Alphabet) -> Result<CoproductMatrix> {
    let cols = enumerate(n, alphabet)?;
    let images = cols
        .iter()
        .filter(|t| !t.is_leaf())
        .map(reduced_coproduct)
        .collect::<Result<Vec<_>>>()?;
    let mut row_index: BTreeMap<(Tree, Tree), usize> = BTreeMap::new();
    for img in &images {
        for key in img.keys() {
            row_index.entry(key.clone()).or_insert(0);
        }
    }
    for (i, v) in row_index.values_mut().enumerate() {
        *v = i;
    }
    let mut matrix = vec![vec![BigInt::from(0); images.len()]; row_index.len()];
    for (j, img) in images.iter().enumerate() {
        for (key, c) in img.iter() {
            matrix[row_index[key]][j] = c.clone();
        }
    }
    Ok((cols, row_index.into_keys().collect(), matrix))
}

/// Basis of the primitive elements of degree `n`.
///
/// Degree 0 has none: the leaf is group-like. For `n ≥ 1` this is the exact
/// rational kernel of `Δ̃` restricted to the degree-`n` span, each vector
/// scaled to coprime integer coefficients.
pub fn primitive_basis(n: usize, alphabet: &Alphabet) -> Result<Vec<LinComb>> {
    if n == 0 {
        enumerate(0, alphabet)?;
        return Ok(Vec::new());
    }
    let (cols, _, matrix) = reduced_coproduct_matrix(n, alphabet)?;
    let kernel = linalg::kernel(&matrix, cols.len());
    Ok(kernel
        .into_iter()
        .map(|v| v.into_iter().zip(cols.iter().cloned()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::coproduct_cuts;
    use crate::freemod::{Coeff, TensorComb};
    use crate::tree::Label;

    fn is_primitive(x: &LinComb) -> bool {
        let lhs = x.flat_map(coproduct_cuts);
        let rhs = x.tensor(&LinComb::one()) + LinComb::one().tensor(x);
        lhs == rhs
    }

    #[test]
    fn degree_zero_is_empty() {
        assert!(primitive_basis(0, &Alphabet::undecorated())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn degree_one_is_spanned_by_single_vertices() {
        let ab = Alphabet::parse_list("a,b").unwrap();
        let basis = primitive_basis(1, &ab).unwrap();
        let expect: Vec<LinComb> = ["a", "b"]
            .iter()
            .map(|s| LinComb::from(Tree::single(Label::new(s).unwrap())))
            .collect();
        assert_eq!(basis, expect);
    }

    /// Both 2-trees have `Δ̃ = (|^o |) ⊗ (|^o |)`, so their difference is
    /// primitive. Derived by hand from the two-vertex coproducts.
    #[test]
    fn undecorated_degree_two_difference_is_primitive() {
        let o = Alphabet::undecorated();
        let (cols, rows, m) = reduced_coproduct_matrix(2, &o).unwrap();
        assert_eq!(cols.len(), 2);
        assert_eq!(rows.len(), 1);
        assert_eq!(m, vec![vec![BigInt::from(1), BigInt::from(1)]]);

        let basis = primitive_basis(2, &o).unwrap();
        let right: Tree = "(|^o (|^o |))".parse().unwrap();
        let left: Tree = "((|^o |)^o |)".parse().unwrap();
        let expect: LinComb = [(Coeff::from(-1), right), (Coeff::from(1), left)]
            .into_iter()
            .collect();
        assert_eq!(basis, vec![expect]);
        assert!(is_primitive(&basis[0]));
    }

    /// Dimension of the primitive space equals `#trees − rank Δ̃`. The rank is
    /// recomputed here by counting distinct nonzero images for degree 2, where
    /// every `Δ̃(t)` is a single basis tensor.
    #[test]
    fn degree_two_dimension_by_counting_images() {
        for labels in ["o", "a,b"] {
            let x = Alphabet::parse_list(labels).unwrap();
            let trees = enumerate(2, &x).unwrap();
            let images: std::collections::BTreeSet<(Tree, Tree)> = trees
                .iter()
                .map(|t| {
                    let d: TensorComb = reduced_coproduct(t).unwrap();
                    assert_eq!(d.len(), 1);
                    d.keys().next().unwrap().clone()
                })
                .collect();
            let dim = primitive_basis(2, &x).unwrap().len();
            assert_eq!(dim, trees.len() - images.len());
        }
    }

    #[test]
    fn kernel_vectors_are_primitive() {
        for labels in ["o", "a,b"] {
            let x = Alphabet::parse_list(labels).unwrap();
            for n in 1..=4 {
                let basis = primitive_basis(n, &x).unwrap();
                let (cols, _, m) = reduced_coproduct_matrix(n, &x).unwrap();
                assert_eq!(basis.len() + linalg::rank(&m), cols.len());
                for v in &basis {
                    assert!(v.is_homogeneous_of(n));
                    assert!(is_primitive(v), "{v}");
                }
            }
        }
    }
}
