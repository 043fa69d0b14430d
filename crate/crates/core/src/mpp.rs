//! Reduction from matrix torsion to the matrix power problem.
//!
//! For a `d × d` matrix `M`, set `N₂ = [[0,1],[0,0]]`,
//! `A = diag(M^d, N₂)` and `B = diag(M^d, O₂)`. Some power `A^n` equals `B`
//! exactly when `M` is torsion: `N₂^n` vanishes once `n ≥ 2`, and
//! `M^(dn) = M^d` needs the powers of `M` to cycle.
//!
//! No matrix power problem solver lives here. [`search_matrix_power`] is a
//! bounded search for exercising the reduction on small inputs.

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MppInstance {
    pub a: RatMatrix,
    pub b: RatMatrix,
    pub source_order: usize,
}

fn nilpotent_block() -> RatMatrix {
    let mut rows = vec![vec![Rational::default(); 2]; 2];
    rows[0][1] = Rational::one();
    RatMatrix::from_rows(rows).expect("2x2")
}

pub fn build_mpp_instance(m: &RatMatrix) -> MppInstance {
    let d = m.order();
    let top = m.pow_u64(d as u64);
    let a = RatMatrix::block_diag(&[top.clone(), nilpotent_block()]).expect("nonempty");
    let b = RatMatrix::block_diag(&[top, RatMatrix::zero(2)]).expect("nonempty");
    MppInstance {
        a,
        b,
        source_order: d,
    }
}

/// Least `n ≤ cap` with `A^n = B`, starting from `A^0 = I`.
///
/// `None` only says nothing was found within the cap.
pub fn search_matrix_power(a: &RatMatrix, b: &RatMatrix, cap: u64) -> Result<Option<u64>> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let mut power = RatMatrix::identity(a.order());
    for n in 0..=cap {
        if &power == b {
            return Ok(Some(n));
        }
        if n < cap {
            power = &power * a;
        }
    }
    Ok(None)
}
