use std::cmp::Ordering;

use super::field::Field;
use super::monomial::Monomial;

/// Sparse polynomial: terms sorted strictly descending in lex order, no
/// zero coefficients. The first term is the leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<E> {
    nvars: usize,
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximum total degree over terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }
}

/// Polynomial arithmetic over `field` in a fixed number of variables.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        PolyRing { field, nvars }
    }

    /// The ring `k[x_1..x_n, y_1..y_n]`.
    pub fn for_vertices(field: F, n: usize) -> Self {
        PolyRing::new(field, 2 * n)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial { nvars: self.nvars, terms: Vec::new() }
    }

    pub fn term(&self, coeff: F::Elem, monomial: Monomial) -> Polynomial<F::Elem> {
        assert_eq!(monomial.nvars(), self.nvars);
        if self.field.is_zero(&coeff) {
            return self.zero();
        }
        Polynomial { nvars: self.nvars, terms: vec![(monomial, coeff)] }
    }

    pub fn var(&self, index: usize) -> Polynomial<F::Elem> {
        self.term(self.field.one(), Monomial::var(self.nvars, index))
    }

    /// Collects arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        let mut terms: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { nvars: self.nvars, terms: out }
    }

    /// `a + coeff * mono * b`, merging sorted term lists.
    pub fn add_scaled(
        &self,
        a: &Polynomial<F::Elem>,
        coeff: &F::Elem,
        mono: &Monomial,
        b: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        if f.is_zero(coeff) {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut left = a.terms.iter().peekable();
        let mut right = b.terms.iter().map(|(m, c)| (m.mul(mono), f.mul(c, coeff))).peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((lm, _)), Some((rm, _))) => lm.cmp(rm),
            };
            match ord {
                Ordering::Greater => out.push(left.next().expect("peeked").clone()),
                Ordering::Less => out.push(right.next().expect("peeked")),
                Ordering::Equal => {
                    let (m, lc) = left.next().expect("peeked");
                    let (_, rc) = right.next().expect("peeked");
                    let c = f.add(lc, &rc);
                    if !f.is_zero(&c) {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add_scaled(a, &self.field.one(), &Monomial::one(self.nvars), b)
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add_scaled(a, &self.field.from_i64(-1), &Monomial::one(self.nvars), b)
    }

    /// `coeff * mono * a`
    pub fn mul_term(&self, a: &Polynomial<F::Elem>, coeff: &F::Elem, mono: &Monomial) -> Polynomial<F::Elem> {
        self.add_scaled(&self.zero(), coeff, mono, a)
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        a.terms.iter().fold(self.zero(), |acc, (m, c)| self.add_scaled(&acc, c, m, b))
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_coeff() {
            None => a.clone(),
            Some(lc) if self.field.is_one(lc) => a.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                self.mul_term(a, &inv, &Monomial::one(self.nvars))
            }
        }
    }

    /// S-polynomial `lcm/lt(a) * a - lcm/lt(b) * b`.
    pub fn s_polynomial(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let f = &self.field;
        let (am, ac) = &a.terms[0];
        let (bm, bc) = &b.terms[0];
        let lcm = am.lcm(bm);
        let left = self.mul_term(a, &f.inv(ac), &lcm.div(am).expect("lcm is a multiple"));
        let bfac = f.neg(&f.inv(bc));
        self.add_scaled(&left, &bfac, &lcm.div(bm).expect("lcm is a multiple"), b)
    }

    /// Normal form of `f` by full multivariate division: no term of the
    /// result is divisible by a leading monomial of `basis`.
    pub fn reduce(&self, f: &Polynomial<F::Elem>, basis: &[Polynomial<F::Elem>]) -> Polynomial<F::Elem> {
        let field = &self.field;
        let mut rest = f.clone();
        let mut remainder = Vec::new();
        while let Some((lm, lc)) = rest.terms.first() {
            let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(lm)));
            match divisor {
                Some(g) => {
                    let (gm, gc) = &g.terms[0];
                    let q = lm.div(gm).expect("checked divisibility");
                    let c = field.neg(&field.div(lc, gc));
                    rest = self.add_scaled(&rest, &c, &q, g);
                }
                None => {
                    let t = rest.terms.remove(0);
                    remainder.push(t);
                }
            }
        }
        Polynomial { nvars: self.nvars, terms: remainder }
    }

    /// `3*x1*y2^2 - x2 + 1/2` style rendering; `0` for zero.
    pub fn render(&self, a: &Polynomial<F::Elem>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in a.terms.iter().enumerate() {
            let (negative, magnitude) = self.field.render(c);
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&m.render());
            } else {
                out.push_str(&magnitude);
                out.push('*');
                out.push_str(&m.render());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::for_vertices(Rationals, n)
    }

    // f_ij = x_i*y_j - x_j*y_i on n vertices
    fn f(r: &PolyRing<Rationals>, i: usize, j: usize) -> Polynomial<num_rational::BigRational> {
        let n = r.nvars() / 2;
        let q = r.field();
        r.from_terms([
            (Monomial::product_of(2 * n, [i - 1, n + j - 1]), q.one()),
            (Monomial::product_of(2 * n, [j - 1, n + i - 1]), q.from_i64(-1)),
        ])
    }

    #[test]
    fn arithmetic_and_rendering() {
        let r = ring(2);
        let x1 = r.var(0);
        let y2 = r.var(3);
        let p = r.add(&r.mul(&x1, &y2), &r.mul(&x1, &x1));
        assert_eq!(r.render(&p), "x1^2 + x1*y2");
        assert_eq!(r.render(&r.sub(&p, &p)), "0");
        let q = r.field();
        let half = q.div(&q.one(), &q.from_i64(2));
        let t = r.from_terms([(Monomial::one(4), q.from_i64(-3)), (Monomial::var(4, 1), half)]);
        assert_eq!(r.render(&t), "1/2*x2 - 3");
        assert_eq!(r.render(&f(&r, 1, 2)), "x1*y2 - x2*y1");
    }

    #[test]
    fn reduction_examples() {
        let r = ring(3);
        let f13 = f(&r, 1, 3);
        let f23 = f(&r, 2, 3);
        assert!(r.reduce(&f13, std::slice::from_ref(&f13)).is_zero());

        let x1y3 = r.term(r.field().one(), Monomial::product_of(6, [0, 5]));
        assert_eq!(r.render(&r.reduce(&x1y3, std::slice::from_ref(&f13))), "x3*y1");

        let s = r.sub(&r.mul(&r.var(1), &f13), &r.mul(&r.var(0), &f23));
        let nf = r.reduce(&s, &[f13, f23]);
        assert_eq!(r.render(&nf), "x1*x3*y2 - x2*x3*y1");
    }

    #[test]
    fn s_polynomial_is_monic_combination() {
        let r = ring(3);
        let s = r.s_polynomial(&f(&r, 1, 3), &f(&r, 2, 3));
        assert_eq!(r.render(&s), "x1*x3*y2 - x2*x3*y1");
    }
}
