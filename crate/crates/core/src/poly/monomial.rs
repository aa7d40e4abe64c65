use std::fmt::Write;

/// Exponent vector over `2n` variables: indices `0..n` are `x_1..x_n`,
/// indices `n..2n` are `y_1..y_n`.
///
/// The derived ordering is pure lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    /// Product of the given variables (with repetition).
    pub fn product_of(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Monomial::one(nvars);
        for v in vars {
            m.0[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`: the colon `<self> : other` generator.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `x1*y2^2` style, or `1` for the unit monomial.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&var_name(k, self.0.len()));
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Name of variable `index` among `nvars`: `x1..xn` then `y1..yn`.
pub fn var_name(index: usize, nvars: usize) -> String {
    let n = nvars / 2;
    if nvars % 2 == 1 {
        format!("z{}", index + 1)
    } else if index < n {
        format!("x{}", index + 1)
    } else {
        format!("y{}", index - n + 1)
    }
}
