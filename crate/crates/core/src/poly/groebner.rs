//! Buchberger's algorithm with reduced-basis normalization.

use std::collections::{BTreeSet, HashSet};

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct BuchbergerOptions {
    /// Maximum number of pending S-pairs before giving up.
    pub max_pending_pairs: usize,
    /// Maximum basis size before giving up.
    pub max_basis_len: usize,
    /// Skip pairs covered by the chain criterion.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { max_pending_pairs: 200_000, max_basis_len: 20_000, chain_criterion: true }
    }
}

// pairs are popped smallest first: lcm degree, then lcm in lex order, then indices
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens` (default options).
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Result<Vec<Polynomial<F::Elem>>> {
    buchberger_with(ring, gens, BuchbergerOptions::default())
}

/// Reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial
/// descending. Pairs are processed by the normal strategy with Buchberger's
/// coprime criterion and, optionally, the chain criterion.
pub fn buchberger_with<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    opts: BuchbergerOptions,
) -> Result<Vec<Polynomial<F::Elem>>> {
    let mut basis: Vec<Polynomial<F::Elem>> = Vec::new();
    for g in gens {
        let g = ring.monic(g);
        if !g.is_zero() && !basis.contains(&g) {
            basis.push(g);
        }
    }
    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push = |queue: &mut BTreeSet<Pair>,
                pending: &mut HashSet<(usize, usize)>,
                basis: &[Polynomial<F::Elem>],
                i: usize,
                j: usize| {
        let lcm = lead(&basis[i]).lcm(lead(&basis[j]));
        queue.insert(Pair { degree: lcm.degree(), lcm, i, j });
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(&mut queue, &mut pending, &basis, i, j);
        }
    }
    while let Some(pair) = queue.pop_first() {
        pending.remove(&(pair.i, pair.j));
        let (a, b) = (&basis[pair.i], &basis[pair.j]);
        if lead(a).is_coprime(lead(b)) {
            continue;
        }
        if opts.chain_criterion && chain_covers(&basis, &pending, &pair) {
            continue;
        }
        let s = ring.s_polynomial(a, b);
        let h = ring.reduce(&s, &basis);
        if h.is_zero() {
            continue;
        }
        let h = ring.monic(&h);
        let k = basis.len();
        basis.push(h);
        if basis.len() > opts.max_basis_len {
            return Err(Error::Capacity(format!("Gröbner basis exceeded {} elements", opts.max_basis_len)));
        }
        for i in 0..k {
            push(&mut queue, &mut pending, &basis, i, k);
        }
        if queue.len() > opts.max_pending_pairs {
            return Err(Error::Capacity(format!("S-pair queue exceeded {} pairs", opts.max_pending_pairs)));
        }
    }
    Ok(reduce_basis(ring, basis))
}

fn lead<E>(p: &Polynomial<E>) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

// Some k has lm(k) | lcm(i, j) while neither (i, k) nor (j, k) is pending.
fn chain_covers<E>(basis: &[Polynomial<E>], pending: &HashSet<(usize, usize)>, pair: &Pair) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (0..basis.len()).any(|k| {
        k != pair.i
            && k != pair.j
            && lead(&basis[k]).divides(&pair.lcm)
            && !pending.contains(&key(pair.i, k))
            && !pending.contains(&key(pair.j, k))
    })
}

/// Turns any Gröbner basis into the reduced one: drops elements whose leading
/// monomial is divisible by another's, tail-reduces, makes monic and sorts
/// descending by leading monomial.
pub fn reduce_basis<F: Field>(ring: &PolyRing<F>, basis: Vec<Polynomial<F::Elem>>) -> Vec<Polynomial<F::Elem>> {
    let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
    let mut sorted = basis;
    // smallest leading monomials first, so divisors are kept ahead of multiples
    sorted.sort_by(|a, b| lead(a).cmp(lead(b)));
    for p in sorted {
        if p.is_zero() {
            continue;
        }
        if !minimal.iter().any(|q| lead(q).divides(lead(&p))) {
            minimal.push(p);
        }
    }
    let mut reduced: Vec<Polynomial<F::Elem>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial<F::Elem>> =
                minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, q)| q.clone()).collect();
            ring.monic(&ring.reduce(&minimal[k], &others))
        })
        .collect();
    reduced.sort_by(|a, b| lead(b).cmp(lead(a)));
    reduced
}

/// Whether every S-polynomial of `basis` reduces to zero against it.
pub fn is_groebner_basis<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F::Elem>]) -> bool {
    (0..basis.len()).all(|j| (0..j).all(|i| ring.reduce(&ring.s_polynomial(&basis[i], &basis[j]), basis).is_zero()))
}

/// Monic, no leading monomial divides another, and no term of any element is
/// divisible by the leading monomial of a different element.
pub fn is_reduced<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F::Elem>]) -> bool {
    basis.iter().enumerate().all(|(k, p)| {
        p.leading_coeff().is_some_and(|c| ring.field().is_one(c))
            && basis.iter().enumerate().all(|(j, q)| j == k || p.terms().iter().all(|(m, _)| !lead(q).divides(m)))
    })
}

/// Whether every element has total degree 2 (vacuously true for `[]`).
pub fn is_quadratic_basis<E>(basis: &[Polynomial<E>]) -> bool {
    basis.iter().all(|p| p.total_degree() == 2)
}
