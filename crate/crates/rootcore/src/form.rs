//! Invariant form on simple roots, normalised so long roots have squared length 2.
//!
//! Node numbering (1-based in prose, 0-based in code):
//!
//! * `A_r`: chain 1-2-…-r.
//! * `B_r`: chain 1-…-r, `α_r` short.
//! * `C_r`: chain 1-…-r, `α_r` long, the others short.
//! * `D_r`: chain 1-…-(r−2), with r−1 and r both attached to r−2.
//! * `G2`: `α_1` short (length² 2/3), `α_2` long.
//! * `F4`: chain 1-2-3-4, `α_1`, `α_2` short, `α_3`, `α_4` long.
//! * `E6`: chain 1-2-3-4-5, node 6 attached to 3.
//! * `E7`: chain 1-2-3-4-5-6, node 7 attached to 4.
//! * `E8`: chain 1-2-3-4-5-6-7, node 8 attached to 5.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::types::{Family, SimpleType};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Edges of the Dynkin diagram (0-based, unordered) with the Gram entry on each edge.
fn edges(t: SimpleType) -> Vec<(usize, usize, BigRational)> {
    let r = t.rank();
    let chain = |n: usize, w: BigRational| -> Vec<(usize, usize, BigRational)> {
        (0..n.saturating_sub(1)).map(|i| (i, i + 1, w.clone())).collect()
    };
    match t.family() {
        Family::A | Family::B => chain(r, q(-1, 1)),
        Family::C => {
            let mut e = chain(r - 1, q(-1, 2));
            e.push((r - 2, r - 1, q(-1, 1)));
            e
        }
        Family::D => {
            let mut e = chain(r - 1, q(-1, 1));
            e.push((r - 3, r - 1, q(-1, 1)));
            e
        }
        Family::G2 => vec![(0, 1, q(-1, 1))],
        Family::F4 => vec![(0, 1, q(-1, 2)), (1, 2, q(-1, 1)), (2, 3, q(-1, 1))],
        Family::E6 => {
            let mut e = chain(5, q(-1, 1));
            e.push((2, 5, q(-1, 1)));
            e
        }
        Family::E7 => {
            let mut e = chain(6, q(-1, 1));
            e.push((3, 6, q(-1, 1)));
            e
        }
        Family::E8 => {
            let mut e = chain(7, q(-1, 1));
            e.push((4, 7, q(-1, 1)));
            e
        }
    }
}

/// Squared lengths `(α_i, α_i)` of the simple roots.
pub fn simple_root_norms(t: SimpleType) -> Vec<BigRational> {
    let r = t.rank();
    match t.family() {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => vec![q(2, 1); r],
        Family::B => {
            let mut v = vec![q(2, 1); r];
            v[r - 1] = q(1, 1);
            v
        }
        Family::C => {
            let mut v = vec![q(1, 1); r];
            v[r - 1] = q(2, 1);
            v
        }
        Family::G2 => vec![q(2, 3), q(2, 1)],
        Family::F4 => vec![q(1, 1), q(1, 1), q(2, 1), q(2, 1)],
    }
}

/// Gram matrix `B_ij = (α_i, α_j)`.
pub fn gram_matrix(t: SimpleType) -> Vec<Vec<BigRational>> {
    let r = t.rank();
    let mut g = vec![vec![q(0, 1); r]; r];
    for (i, n) in simple_root_norms(t).into_iter().enumerate() {
        g[i][i] = n;
    }
    for (i, j, w) in edges(t) {
        g[i][j] = w.clone();
        g[j][i] = w;
    }
    g
}

/// Cartan matrix `A_ij = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`.
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let g = gram_matrix(t);
    let r = t.rank();
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let v = &g[i][j] * q(2, 1) / &g[j][j];
            assert!(v.is_integer(), "non-integral Cartan entry for {t}");
            a[i][j] = i64::try_from(v.to_integer()).expect("small Cartan entry");
        }
    }
    a
}

/// Neighbours of each node in the Dynkin diagram.
pub fn adjacency(t: SimpleType) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); t.rank()];
    for (i, j, _) in edges(t) {
        adj[i].push(j);
        adj[j].push(i);
    }
    adj
}
