//! Hilbert series of `k[z_1..z_m] / I` for monomial ideals `I`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::series::PowerSeries;

/// Numerator `K(t)` with `HS(S/I) = K(t) / (1 - t)^m`, as integer coefficients.
///
/// Uses `K(I) = K(I + <z>) + t * K(I : z)`, the quotient recursion
/// `HS(I + <m>) = HS(I) - t^deg(m) HS(I : m)` with the pivot `m = z` chosen as
/// the variable occurring in the most minimal generators.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let mut k = numerator(minimalize(gens.to_vec()));
    while k.len() > 1 && k.last().is_some_and(|c| c.is_zero()) {
        k.pop();
    }
    k
}

/// Hilbert series of `S/I` through degree `truncation`, where `S` has
/// `nvars` variables and `I` is generated by `gens`.
pub fn hilbert_series(gens: &[Monomial], nvars: usize, truncation: usize) -> PowerSeries {
    assert!(gens.iter().all(|m| m.nvars() == nvars), "generator arity differs from nvars");
    let numerator = PowerSeries::from_bigints(&hilbert_numerator(gens), truncation);
    numerator.mul(&PowerSeries::free_series(nvars, truncation))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|d| d.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(k, a)| gens[k + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree() as usize)));
    }
    let nvars = gens[0].nvars();
    let pivot = (0..nvars)
        .max_by_key(|&v| (gens.iter().filter(|m| m.exponents()[v] > 0).count(), std::cmp::Reverse(v)))
        .expect("at least one variable");
    let z = Monomial::var(nvars, pivot);

    let mut sum: Vec<Monomial> = gens.iter().filter(|m| m.exponents()[pivot] == 0).cloned().collect();
    sum.push(z.clone());
    let colon: Vec<Monomial> = gens.iter().map(|m| m.quotient_by_gcd(&z)).collect();

    let with_pivot = numerator(minimalize(sum));
    let quotient = numerator(minimalize(colon));
    let shifted: Vec<BigInt> = std::iter::once(BigInt::zero()).chain(quotient).collect();
    poly_add(&with_pivot, &shifted)
}

fn one_minus_t_pow(d: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d + 1];
    p[0] += 1;
    p[d] -= 1;
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k] += c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coeffs().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Independent count of degree-`d` monomials divisible by no generator.
    fn count_standard(gens: &[Monomial], nvars: usize, d: usize) -> i64 {
        fn rec(gens: &[Monomial], exps: &mut Vec<u16>, var: usize, left: usize) -> i64 {
            if var + 1 == exps.len() {
                exps[var] = left as u16;
                let m = Monomial::from_exponents(exps.clone());
                return (!gens.iter().any(|g| g.divides(&m))) as i64;
            }
            (0..=left)
                .map(|e| {
                    exps[var] = e as u16;
                    rec(gens, exps, var + 1, left - e)
                })
                .sum()
        }
        rec(gens, &mut vec![0; nvars], 0, d)
    }

    #[test]
    fn no_generators() {
        assert_eq!(ints(&hilbert_series(&[], 4, 3)), [1, 4, 10, 20]);
    }

    #[test]
    fn single_generator() {
        let m = Monomial::product_of(4, [0, 3]);
        assert_eq!(ints(&hilbert_series(&[m], 4, 2)), [1, 4, 9]);
    }

    #[test]
    fn initial_ideal_of_two_edges() {
        let gens =
            [Monomial::product_of(6, [0, 5]), Monomial::product_of(6, [1, 5]), Monomial::product_of(6, [0, 2, 4])];
        assert_eq!(ints(&hilbert_series(&gens, 6, 2)), [1, 6, 19]);
        let full = hilbert_series(&gens, 6, 6);
        for d in 0..=6 {
            assert_eq!(ints(&full)[d], count_standard(&gens, 6, d));
        }
    }

    #[test]
    fn numerator_of_complete_intersection() {
        let gens = [Monomial::product_of(4, [0, 1]), Monomial::product_of(4, [2, 3])];
        let k: Vec<i64> = hilbert_numerator(&gens).iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(k, [1, 0, -2, 0, 1]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
            proptest::collection::vec(0u16..3, nvars)
                .prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
                .prop_map(Monomial::from_exponents)
        }

        proptest! {
            #[test]
            fn recursion_matches_enumeration(
                (nvars, gens) in (1usize..=6).prop_flat_map(|nv| (Just(nv), proptest::collection::vec(monomial(nv), 0..5)))
            ) {
                let hs = hilbert_series(&gens, nvars, 6);
                let got = ints(&hs);
                for (d, &coeff) in got.iter().enumerate().take(7) {
                    prop_assert_eq!(coeff, count_standard(&gens, nvars, d));
                }
            }
        }
    }
}
