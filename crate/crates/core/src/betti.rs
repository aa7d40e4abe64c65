//! First two Betti numbers of the residue field over `R = S/J_G`.
//!
//! `beta_1 = 2n` and `beta_2 = C(2n, 2) + |E|`. The brute-force route
//! computes the kernel of `R_1^{2n} -> R_2`, `(i, l) -> chi_i * l`, by exact
//! elimination, where `chi_1..chi_2n` are `x_1..x_n, y_1..y_n`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::poly::{Field, Rationals};

/// Largest `n` accepted by the brute-force computation.
pub const BRUTE_FORCE_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub beta1: usize,
    pub beta2: usize,
    pub beta2_verified: Option<usize>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

pub fn betti_formula(g: &Graph) -> BettiReport {
    let m = 2 * g.n();
    BettiReport { beta1: m, beta2: m * (m - 1) / 2 + g.edge_count(), beta2_verified: None, matches: None }
}

/// Formula values, verified by brute force when `n` is within the cap.
pub fn betti_report(g: &Graph) -> BettiReport {
    let mut report = betti_formula(g);
    if let Ok(k) = betti2_bruteforce(g) {
        report.beta2_verified = Some(k);
        report.matches = Some(k == report.beta2);
    }
    report
}

/// Kernel computation plus the status of the explicit syzygies: the Koszul
/// syzygies `chi_b e_a - chi_a e_b` and, per edge `{i,j}`, `y_j e_i - y_i e_j`
/// (with `e_i` the basis vector paired with `x_i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyzygyCheck {
    pub kernel_dim: usize,
    /// Dimension of `R_2`, `C(2n+1, 2) - |E|`.
    pub target_dim: usize,
    pub koszul_syzygies: usize,
    pub edge_syzygies: usize,
    pub all_in_kernel: bool,
    pub independent: bool,
}

impl SyzygyCheck {
    /// The explicit syzygies are in the kernel, independent, and span it.
    pub fn spans_kernel(&self) -> bool {
        self.all_in_kernel && self.independent && self.koszul_syzygies + self.edge_syzygies == self.kernel_dim
    }
}

pub fn betti2_bruteforce(g: &Graph) -> Result<usize> {
    Ok(syzygy_check(g)?.kernel_dim)
}

pub fn syzygy_check(g: &Graph) -> Result<SyzygyCheck> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Capacity(format!(
            "brute-force Betti computation is capped at n = {BRUTE_FORCE_CAP} (got n = {n})"
        )));
    }
    let q = Rationals;
    let m = 2 * n;
    let ncols = m * (m + 1) / 2;
    let idx = |a: usize, b: usize| {
        let (j, k) = (a.min(b), a.max(b));
        j * m - j * (j + 1) / 2 + k
    };

    // span of the f_ij in S_2
    let gens: Vec<Vec<BigRational>> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![BigRational::zero(); ncols];
            v[idx(i - 1, n + j - 1)] = BigRational::one();
            v[idx(j - 1, n + i - 1)] = -BigRational::one();
            v
        })
        .collect();
    let ech = linalg::rref(&q, &gens, ncols);
    let mut pivot_row = vec![None; ncols];
    for (r, &p) in ech.pivots.iter().enumerate() {
        pivot_row[p] = Some(r);
    }
    let free_cols: Vec<usize> = (0..ncols).filter(|&c| pivot_row[c].is_none()).collect();

    // coordinates of a monomial in R_2, in the basis of non-pivot monomials
    let reduce_monomial = |col: usize| -> Vec<BigRational> {
        match pivot_row[col] {
            None => free_cols.iter().map(|&c| if c == col { q.one() } else { q.zero() }).collect(),
            Some(r) => free_cols.iter().map(|&c| -ech.rows[r][c].clone()).collect(),
        }
    };
    // row (i, l) of the map R_1^{2n} -> R_2
    let map_rows: Vec<Vec<BigRational>> =
        (0..m).flat_map(|i| (0..m).map(move |l| (i, l))).map(|(i, l)| reduce_monomial(idx(i, l))).collect();
    let target_dim = free_cols.len();
    let kernel_dim = m * m - linalg::rank(&q, &map_rows, target_dim);

    let mut explicit: Vec<Vec<BigRational>> = Vec::new();
    let unit = |pairs: &[(usize, usize, i64)]| {
        let mut v = vec![BigRational::zero(); m * m];
        for &(pos, letter, c) in pairs {
            v[pos * m + letter] = q.from_i64(c);
        }
        v
    };
    for a in 0..m {
        for b in a + 1..m {
            explicit.push(unit(&[(a, b, 1), (b, a, -1)]));
        }
    }
    let koszul_syzygies = explicit.len();
    for &(i, j) in g.edges() {
        explicit.push(unit(&[(i - 1, n + j - 1, 1), (j - 1, n + i - 1, -1)]));
    }
    let edge_syzygies = explicit.len() - koszul_syzygies;

    let all_in_kernel = explicit.iter().all(|s| {
        (0..target_dim).all(|c| {
            s.iter()
                .zip(&map_rows)
                .filter(|(coef, _)| !coef.is_zero())
                .map(|(coef, row)| coef * &row[c])
                .sum::<BigRational>()
                .is_zero()
        })
    });
    let independent = linalg::rank(&q, &explicit, m * m) == explicit.len();
    Ok(SyzygyCheck { kernel_dim, target_dim, koszul_syzygies, edge_syzygies, all_in_kernel, independent })
}
