use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{int, RatMatrix, Rational};
use crate::error::Result;

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are always trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Rational::one()] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                Poly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
            None => Poly::zero(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free factorization `p = c · ∏ fᵢ^i` by Yun's algorithm.
    /// Returns `(fᵢ, i)` pairs with monic, nonconstant `fᵢ`.
    pub fn square_free_factors(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let c = d.div_rem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            let b_next = b.div_rem(&a).0;
            let c_next = dd.div_rem(&a).0;
            dd = c_next.sub(&b_next.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    /// Sturm sequence `p, p', -rem(p, p'), …`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let r = seq.last().unwrap().div_rem(&next).1.neg();
            seq.push(next);
            next = r;
        }
        seq
    }

    /// Distinct real roots, split by sign, for a square-free polynomial.
    fn distinct_root_signs(&self) -> RootSigns {
        let mut g = self.clone();
        let mut zero = 0;
        if g.coeffs.first().is_some_and(Zero::is_zero) {
            zero = 1;
            g = g.div_rem(&Poly::x()).0;
        }
        let seq = g.sturm_sequence();
        let at_neg_inf = sign_changes(seq.iter().map(|p| {
            let s = sign_i8(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 { -s } else { s }
        }));
        let at_zero = sign_changes(seq.iter().map(|p| sign_i8(&p.coeffs[0])));
        let at_pos_inf = sign_changes(seq.iter().map(|p| sign_i8(p.leading().unwrap())));
        RootSigns { negative: at_neg_inf - at_zero, zero, positive: at_zero - at_pos_inf }
    }

    /// Real roots by sign, counted with multiplicity.
    pub fn real_root_signs(&self) -> RootSigns {
        let mut total = RootSigns::default();
        for (f, mult) in self.square_free_factors() {
            let r = f.distinct_root_signs();
            total.negative += mult * r.negative;
            total.zero += mult * r.zero;
            total.positive += mult * r.positive;
        }
        total
    }
}

fn sign_i8(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            n += 1;
        }
        prev = s;
    }
    n
}

/// Real root counts by sign, with multiplicity. Zero is its own bucket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RootSigns {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

impl RootSigns {
    pub fn real(&self) -> usize {
        self.negative + self.zero + self.positive
    }
}

/// Monic characteristic polynomial `det(λI − A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    poly: Poly,
}

impl CharPoly {
    /// Faddeev–LeVerrier recurrence; exact over the rationals.
    pub fn of(a: &RatMatrix) -> Result<CharPoly> {
        let n = a.order()?;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        let ident = RatMatrix::identity(n);
        for k in 1..=n {
            m = &(a * &m) + &ident.scale(&coeffs[n - k + 1]);
            coeffs[n - k] = -(a * &m).trace() / int(k as i64);
        }
        Ok(CharPoly { poly: Poly::new(coeffs) })
    }

    /// Coefficients, constant term first; the last one is 1.
    pub fn coefficients(&self) -> &[Rational] {
        self.poly.coefficients()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn real_root_signs(&self) -> RootSigns {
        self.poly.real_root_signs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) = x^2 + x - 2
        let f = p(&[-2, 1, 1]);
        let (q, r) = f.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
        // gcd((x-1)^2 (x+3), (x-1)(x+5)) = x - 1
        let a = p(&[3, -5, 1, 1]);
        let b = p(&[-5, 4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn square_free_decomposition() {
        // (x-1)^3 (x+2)^2 x
        let mut f = p(&[1]);
        for _ in 0..3 {
            f = mul(&f, &p(&[-1, 1]));
        }
        for _ in 0..2 {
            f = mul(&f, &p(&[2, 1]));
        }
        f = mul(&f, &p(&[0, 1]));
        let mut sq = f.square_free_factors();
        sq.sort_by_key(|(_, m)| *m);
        assert_eq!(sq, vec![(p(&[0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
        assert_eq!(f.real_root_signs(), RootSigns { negative: 2, zero: 1, positive: 3 });
    }

    #[test]
    fn complex_roots_are_not_counted() {
        // (x^2 + 1)(x + 1/2)
        let f = mul(&p(&[1, 0, 1]), &Poly::new(vec![rat(1, 2), int(1)]));
        assert_eq!(f.real_root_signs(), RootSigns { negative: 1, zero: 0, positive: 0 });
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut c = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Poly::new(c)
    }
}
