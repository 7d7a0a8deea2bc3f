//! Elements of the cyclotomic field ℚ(ζ_N) in the power basis modulo Φ_N.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Per-order data shared by every element of ℚ(ζ_N).
///
/// Instances are interned and live for the whole process, so elements can
/// hold a plain `&'static` reference.
pub struct CycField {
    order: u32,
    degree: usize,
    /// Coefficients of Φ_N, lowest degree first. Monic.
    phi: Vec<i64>,
    /// `powers[k]` is ζ^k reduced, for `0 <= k < max(N, 2·degree)`.
    powers: Vec<Vec<Rational>>,
}

fn poly_divrem_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    // exact division by a monic integer polynomial
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; r.len().saturating_sub(dd)];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Coefficients of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divrem_int(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl CycField {
    /// The interned field of order `n`. Panics on `n == 0`.
    pub fn get(n: u32) -> &'static CycField {
        assert!(n >= 1, "cyclotomic order must be positive");
        static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycField>>> = OnceLock::new();
        let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().expect("field table poisoned");
        if let Some(f) = guard.get(&n) {
            return f;
        }
        let f: &'static CycField = Box::leak(Box::new(CycField::build(n)));
        guard.insert(n, f);
        f
    }

    fn build(n: u32) -> CycField {
        let phi = cyclotomic_polynomial(n);
        let degree = euler_phi(n);
        debug_assert_eq!(phi.len(), degree + 1);
        let count = (n as usize).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::ZERO; degree];
        cur[0] = Rational::ONE;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x, then subtract lead·Φ_N
            let lead = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rational::ZERO;
            if !lead.is_zero() {
                for i in 0..degree {
                    cur[i] -= &(&lead * &Rational::from_int(phi[i]));
                }
            }
        }
        CycField { order: n, degree, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// ζ_N^k for any integer `k`.
    pub fn zeta_pow(&'static self, k: i64) -> CycNum {
        let k = k.rem_euclid(self.order as i64) as usize;
        CycNum::from_coeffs(self, self.powers[k].clone())
    }

    /// The primitive `r`-th root ζ_N^{N/r}; requires `r | N`.
    pub fn root_of_unity(&'static self, r: u32) -> Result<CycNum> {
        if r == 0 || !self.order.is_multiple_of(r) {
            return Err(Error::OrderIncompatible { needed: r, order: self.order });
        }
        Ok(self.zeta_pow((self.order / r) as i64))
    }
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

type Coeffs = SmallVec<[Rational; 4]>;

/// An element of ℚ(ζ_N). Trailing zero coefficients are never stored, so a
/// rational number has at most one coefficient and is recognised in O(1).
#[derive(Clone)]
pub struct CycNum {
    field: &'static CycField,
    coeffs: Coeffs,
}

fn trim(c: &mut Coeffs) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

impl CycNum {
    pub fn zero(field: &'static CycField) -> Self {
        CycNum { field, coeffs: Coeffs::new() }
    }

    pub fn one(field: &'static CycField) -> Self {
        Self::from_rational(field, Rational::ONE)
    }

    pub fn from_rational(field: &'static CycField, r: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        if !r.is_zero() {
            coeffs.push(r);
        }
        CycNum { field, coeffs }
    }

    pub fn from_int(field: &'static CycField, n: i64) -> Self {
        Self::from_rational(field, Rational::from_int(n))
    }

    /// Builds an element from already-reduced power-basis coefficients.
    fn from_coeffs(field: &'static CycField, v: impl IntoIterator<Item = Rational>) -> Self {
        let mut coeffs: Coeffs = v.into_iter().collect();
        trim(&mut coeffs);
        CycNum { field, coeffs }
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Power-basis coefficients, padded to length φ(N).
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.coeffs.iter().cloned().collect();
        v.resize(self.field.degree, Rational::ZERO);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Re-expresses `self` in the field of order `m`, which must be a multiple
    /// of the current order (or `self` must be rational).
    pub fn embed(&self, target: &'static CycField) -> Self {
        if std::ptr::eq(self.field, target) {
            return self.clone();
        }
        if self.is_rational() {
            return CycNum { field: target, coeffs: self.coeffs.clone() };
        }
        assert!(
            target.order.is_multiple_of(self.field.order),
            "cannot embed Q(zeta_{}) into Q(zeta_{})",
            self.field.order,
            target.order
        );
        let step = (target.order / self.field.order) as i64;
        let mut acc = vec![Rational::ZERO; target.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &target.powers[((k as i64 * step) % target.order as i64) as usize];
            for (a, b) in acc.iter_mut().zip(p) {
                if !b.is_zero() {
                    *a += &(c * b);
                }
            }
        }
        Self::from_coeffs(target, acc)
    }

    fn common_field(a: &CycNum, b: &CycNum) -> &'static CycField {
        if std::ptr::eq(a.field, b.field) {
            return a.field;
        }
        match (a.is_rational(), b.is_rational()) {
            (true, _) => b.field,
            (_, true) => a.field,
            _ => CycField::get(a.field.order.lcm(&b.field.order)),
        }
    }

    /// Reduces an arbitrary-length coefficient vector over powers of ζ_N.
    pub fn normalize(field: &'static CycField, raw: &[Rational]) -> Self {
        let d = field.degree;
        let n = field.order as usize;
        let mut acc = vec![Rational::ZERO; d];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                acc[k] += c;
            } else {
                let p = &field.powers[k % n];
                for (a, b) in acc.iter_mut().zip(p) {
                    if !b.is_zero() {
                        *a += &(c * b);
                    }
                }
            }
        }
        Self::from_coeffs(field, acc)
    }

    /// Multiplicative inverse via extended Euclid against Φ_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.field, r.inv().expect("nonzero")));
        }
        let phi: Vec<Rational> = self.field.phi.iter().map(|&c| Rational::from_int(c)).collect();
        let a: Vec<Rational> = self.coeffs.iter().cloned().collect();
        // invariant: s·a ≡ r (mod Φ)
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::ONE]);
        while r1.len() != 1 {
            let (q, r) = upoly_divrem(&r0, &r1);
            let s2 = upoly_sub(&s0, &upoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            debug_assert!(!r1.is_empty(), "Φ_N is irreducible, gcd must be a unit");
        }
        let c = r1[0].inv().expect("nonzero remainder");
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::normalize(self.field, &s))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = self.field.order as usize;
        let mut raw = vec![Rational::ZERO; n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] += c;
        }
        Self::normalize(self.field, &raw)
    }

    /// If `self` is a root of unity of order dividing `r`, the exponent `k`
    /// in `[0, r)` with `self = ζ_r^k` (where ζ_r = ζ_N^{N/r}).
    pub fn discrete_log(&self, r: u32) -> Option<u32> {
        let root = self.field.root_of_unity(r).ok()?;
        let mut cur = Self::one(self.field);
        for k in 0..r {
            if &cur == self {
                return Some(k);
            }
            cur = &cur * &root;
        }
        None
    }

    /// Multiplies by a rational in place; skips the field machinery.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.field);
        }
        CycNum { field: self.field, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        super::rational::denominator_lcm(self.coeffs.iter())
    }

    /// Whether the printed form is a sum and must be parenthesised as a factor.
    pub fn needs_parens(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

fn upoly_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn upoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    upoly_trim(out)
}

fn upoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => &x - y,
                None => x,
            }
        })
        .collect();
    upoly_trim(out)
}

fn upoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = upoly_trim(a.to_vec());
    let b = upoly_trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::ZERO; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            let t = &c * y;
            r[shift + j] -= &t;
        }
        q[shift] = c;
        r = upoly_trim(r);
    }
    (upoly_trim(q), r)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs.len() <= 1 && other.coeffs.len() <= 1 {
            return self.coeffs == other.coeffs;
        }
        if std::ptr::eq(self.field, other.field) {
            return self.coeffs == other.coeffs;
        }
        false
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if self.coeffs.len() > 1 {
            self.field.order.hash(state);
        }
        self.coeffs.len().hash(state);
        for c in &self.coeffs {
            c.hash(state);
        }
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let f = CycNum::common_field(self, rhs);
        if !std::ptr::eq(f, self.field) && !self.is_rational()
            || !std::ptr::eq(f, rhs.field) && !rhs.is_rational()
        {
            return &self.embed(f) + &rhs.embed(f);
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Coeffs::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        trim(&mut coeffs);
        CycNum { field: f, coeffs }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        if rhs.is_zero() {
            return self.clone();
        }
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero(CycNum::common_field(self, rhs));
        }
        let f = CycNum::common_field(self, rhs);
        if let Some(r) = self.to_rational() {
            return CycNum { field: f, ..rhs.scale(&r) };
        }
        if let Some(r) = rhs.to_rational() {
            return CycNum { field: f, ..self.scale(&r) };
        }
        if !std::ptr::eq(f, self.field) || !std::ptr::eq(f, rhs.field) {
            return &self.embed(f) * &rhs.embed(f);
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut raw: SmallVec<[Rational; 8]> = SmallVec::from_elem(Rational::ZERO, len);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += &(a * b);
                }
            }
        }
        CycNum::normalize(f, &raw)
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self * &rhs.inverse().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for CycNum {
    /// Prints as a polynomial in `z`, e.g. `z^2 - 1` or `1/2*z + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{a}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f12() -> &'static CycField {
        CycField::get(12)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(f12().degree(), 4);
    }

    #[test]
    fn normalize_powers() {
        let f = f12();
        let mut raw = vec![Rational::ZERO; 13];
        raw[12] = Rational::ONE;
        assert!(CycNum::normalize(f, &raw).is_one());
        // z^4 = z^2 - 1 modulo x^4 - x^2 + 1
        let z4 = f.zeta_pow(4);
        assert_eq!(z4.coeffs(), vec![Rational::from_int(-1), Rational::ZERO, Rational::ONE, Rational::ZERO]);
        assert!(CycNum::normalize(f, &[]).is_zero());
    }

    #[test]
    fn inverses() {
        let f = f12();
        let z = f.zeta_pow(1);
        assert_eq!(z.inverse().unwrap(), f.zeta_pow(11));
        assert_eq!(CycNum::from_int(f, 2).inverse().unwrap(), CycNum::from_rational(f, Rational::new(1, 2)));
        assert!(CycNum::zero(f).inverse().is_err());
        let a = &f.zeta_pow(1) + &CycNum::from_int(f, 3);
        assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn roots_and_logs() {
        let f = f12();
        let i = f.zeta_pow(3);
        assert!((&i * &i) == CycNum::from_int(f, -1));
        let eps = f.root_of_unity(3).unwrap();
        assert_eq!(eps.discrete_log(3), Some(1));
        assert_eq!((&eps * &eps).discrete_log(3), Some(2));
        assert_eq!(i.discrete_log(3), None);
        assert_eq!(i.conj(), f.zeta_pow(9));
        assert!(f.root_of_unity(5).is_err());
    }

    #[test]
    fn embedding_between_orders() {
        let f3 = CycField::get(3);
        let w = f3.zeta_pow(1);
        let i = CycField::get(4).zeta_pow(1);
        let prod = &w * &i;
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, f12().zeta_pow(7));
    }
}
