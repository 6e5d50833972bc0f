//! Finite fields GF(p^e) with integer-encoded elements.
//!
//! An element of a field built over a coefficient field GF(b) is the
//! polynomial `c_0 + c_1 x + ... + c_{d-1} x^{d-1}` reduced modulo the field's
//! modulus, encoded as `sum c_i * b^i`. Since every coefficient is itself
//! base-p encoded, addition in any field of characteristic p is digit-wise
//! addition mod p of the integer encodings. Multiplication goes through
//! exp/log tables of a primitive element.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub type Elem = u32;

/// Largest field order accepted anywhere in the crate.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    degree: u32,
    q: u32,
    base_order: u32,
    modulus: Vec<Elem>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: AddRule,
}

enum AddRule {
    Xor,
    ModP,
    Table(Vec<Elem>),
    Digits,
}

/// Serialized form of a field: `{"p": int, "e": int, "modulus": [int, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<Elem>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = *prime_factors(q).first()?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

impl Field {
    /// GF(p^e) with the monic irreducible modulus of smallest base-p encoding.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        Field::extend(&Field::prime(p), e as usize)
    }

    pub fn from_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, e)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        let f = Field::new(spec.p, spec.e)?;
        if f.modulus() != spec.modulus.as_slice() {
            return Err(Error::Parse(format!(
                "modulus {:?} is not the canonical modulus {:?} of GF({}^{})",
                spec.modulus,
                f.modulus(),
                spec.p,
                spec.e
            )));
        }
        Ok(f)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            e: self.0.degree,
            modulus: self.0.modulus.clone(),
        }
    }

    fn prime(p: u32) -> Field {
        let n = (p - 1) as u64;
        let factors = prime_factors(n);
        let modpow = |mut b: u64, mut e: u64| {
            let mut r = 1u64;
            b %= p as u64;
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % p as u64;
                }
                b = b * b % p as u64;
                e >>= 1;
            }
            r
        };
        let generator = (1..p)
            .find(|&g| factors.iter().all(|&r| modpow(g as u64, n / r) != 1))
            .expect("prime fields are cyclic");
        let mul = |a: Elem, b: Elem| ((a as u64 * b as u64) % p as u64) as Elem;
        Field::assemble(p, 1, p, vec![0, 1], generator, mul)
    }

    /// Degree-`k` extension of `base`, with the monic irreducible modulus over
    /// `base` whose coefficient list has the smallest base-|base| encoding.
    pub(crate) fn extend(base: &Field, k: usize) -> Result<Field> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let b = base.q() as u64;
        let order = b.checked_pow(k as u32).unwrap_or(u64::MAX);
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        let modulus = smallest_irreducible(base, k);
        let q = order as u32;
        let reduce = PolyRing {
            base,
            modulus: &modulus,
        };
        let slow_mul = |x: Elem, y: Elem| {
            let a = digits(x, b as u32, k);
            let c = digits(y, b as u32, k);
            undigits(&reduce.mulmod(&a, &c), b as u32)
        };
        let n = order - 1;
        let factors = prime_factors(n);
        let slow_pow = |g: Elem, mut e: u64| {
            let mut acc = 1;
            let mut sq = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, sq);
                }
                sq = slow_mul(sq, sq);
                e >>= 1;
            }
            acc
        };
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, n / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        // Multiplication by the generator as a linear map on coefficient vectors.
        let gen = digits(generator, b as u32, k);
        let columns: Vec<Vec<Elem>> = (0..k)
            .map(|j| {
                let mut xj = vec![0; k];
                xj[j] = 1;
                reduce.mulmod(&xj, &gen)
            })
            .collect();
        let step = |x: Elem| {
            let c = digits(x, b as u32, k);
            let mut out = vec![0; k];
            for (j, &cj) in c.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                for (o, &col) in out.iter_mut().zip(&columns[j]) {
                    *o = base.add(*o, base.mul(cj, col));
                }
            }
            undigits(&out, b as u32)
        };
        let degree = base.degree() * k as u32;
        Ok(Field::assemble_with_step(
            base.p(),
            degree,
            base.q(),
            modulus,
            generator,
            q,
            step,
        ))
    }

    fn assemble(
        p: u32,
        degree: u32,
        base_order: u32,
        modulus: Vec<Elem>,
        generator: Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Field {
        let q = p.pow(degree);
        Field::assemble_with_step(p, degree, base_order, modulus, generator, q, |x| mul(x, generator))
    }

    fn assemble_with_step(
        p: u32,
        degree: u32,
        base_order: u32,
        modulus: Vec<Elem>,
        generator: Elem,
        q: u32,
        step: impl Fn(Elem) -> Elem,
    ) -> Field {
        let n = (q - 1) as usize;
        let mut exp = vec![0; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = step(x);
        }
        debug_assert_eq!(x, 1);
        let neg = (0..q).map(|a| digitwise_neg(a, p, degree)).collect();
        let add = if p == 2 {
            AddRule::Xor
        } else if degree == 1 {
            AddRule::ModP
        } else if q <= 256 {
            let mut t = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digitwise_add(a, b, p, degree);
                }
            }
            AddRule::Table(t)
        } else {
            AddRule::Digits
        };
        Field(Arc::new(Inner {
            p,
            degree,
            q,
            base_order,
            modulus,
            generator,
            exp,
            log,
            neg,
            add,
        }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Degree over the prime subfield.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Monic modulus, coefficients low-to-high over the coefficient field.
    pub fn modulus(&self) -> &[Elem] {
        &self.0.modulus
    }

    /// Smallest-encoded primitive element.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.0.q as u64
    }

    pub fn check(&self, a: u64) -> Result<Elem> {
        if self.contains(a) {
            Ok(a as Elem)
        } else {
            Err(Error::InvalidElement { value: a, q: self.0.q })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.add {
            AddRule::Xor => a ^ b,
            AddRule::ModP => {
                let s = a + b;
                if s >= self.0.p {
                    s - self.0.p
                } else {
                    s
                }
            }
            AddRule::Table(t) => t[(a * self.0.q + b) as usize],
            AddRule::Digits => digitwise_add(a, b, self.0.p, self.0.degree),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(a != 0);
        let inner = &*self.0;
        let n = inner.q - 1;
        let l = inner.log[a as usize];
        inner.exp[((n - l) % n) as usize]
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.0.q - 1) as u64;
        let l = (self.0.log[a as usize] as u64 * (n % order)) % order;
        self.0.exp[l as usize]
    }

    /// `g^i` for the primitive element `g`.
    pub fn exp(&self, i: u64) -> Elem {
        self.0.exp[(i % (self.0.q as u64 - 1)) as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.q == other.0.q
                && self.0.base_order == other.0.base_order
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn digitwise_add(mut a: Elem, mut b: Elem, p: u32, degree: u32) -> Elem {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..degree {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digitwise_neg(mut a: Elem, p: u32, degree: u32) -> Elem {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..degree {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

fn digits(mut x: Elem, radix: u32, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % radix;
        x /= radix;
    }
    out
}

fn undigits(c: &[Elem], radix: u32) -> Elem {
    c.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

/// Polynomials over `base` reduced modulo a monic `modulus`.
struct PolyRing<'a> {
    base: &'a Field,
    modulus: &'a [Elem],
}

impl PolyRing<'_> {
    fn mulmod(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = self.base;
        let mut prod = vec![0; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(ai, bj));
            }
        }
        let k = self.modulus.len() - 1;
        poly_rem_monic(f, &mut prod, self.modulus);
        prod.truncate(k);
        prod.resize(k, 0);
        prod
    }
}

/// Reduces `a` in place modulo the monic polynomial `d`; the remainder occupies
/// the low `deg d` coefficients.
fn poly_rem_monic(f: &Field, a: &mut [Elem], d: &[Elem]) {
    let dd = d.len() - 1;
    for top in (dd..a.len()).rev() {
        let c = a[top];
        if c == 0 {
            continue;
        }
        for (i, &di) in d.iter().enumerate() {
            let pos = top - dd + i;
            a[pos] = f.sub(a[pos], f.mul(c, di));
        }
    }
}

fn smallest_irreducible(base: &Field, k: usize) -> Vec<Elem> {
    let b = base.q();
    let count = (b as u64).pow(k as u32);
    for low in 0..count {
        let mut f = digits(low as Elem, b, k);
        f.push(1);
        if is_irreducible(base, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(base: &Field, f: &[Elem]) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    // Linear factors: root search.
    let has_root = base
        .elements()
        .any(|a| f.iter().rev().fold(0, |acc, &c| base.add(base.mul(acc, a), c)) == 0);
    if has_root {
        return false;
    }
    let b = base.q();
    for d in 2..=k / 2 {
        for low in 0..(b as u64).pow(d as u32) {
            let mut g = digits(low as Elem, b, d);
            g.push(1);
            let mut r = f.to_vec();
            poly_rem_monic(base, &mut r, &g);
            if r[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Ordering of the basis `{1, alpha, ..., alpha^{k-1}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisOrder {
    /// `1, alpha, ..., alpha^{k-1}`
    Ascending,
    /// `alpha^{k-1}, ..., alpha, 1`
    Descending,
}

/// GF(q^k) viewed as a k-dimensional space over GF(q) with the ordered basis
/// of powers of a primitive element.
#[derive(Clone, Debug)]
pub struct Extension {
    base: Field,
    field: Field,
    degree: usize,
    alpha: Elem,
    /// Row `j` holds the polynomial-basis coordinates of `alpha^j`.
    powers: Vec<Vec<Elem>>,
    /// Inverse of `powers`, mapping polynomial coordinates to alpha coordinates.
    to_alpha: Vec<Vec<Elem>>,
}

impl Extension {
    pub fn new(base: &Field, k: usize) -> Result<Extension> {
        let field = Field::extend(base, k)?;
        let alpha = field.generator();
        let q = base.q();
        let mut powers = Vec::with_capacity(k);
        let mut x = 1;
        for _ in 0..k {
            powers.push(digits(x, q, k));
            x = field.mul(x, alpha);
        }
        let flat: Vec<Elem> = powers.iter().flatten().copied().collect();
        let inv = Matrix::from_vec(base.clone(), k, k, flat)?
            .inverse()
            .expect("alpha generates the extension, so its powers are a basis");
        let to_alpha = (0..k).map(|i| inv.row(i).to_vec()).collect();
        Ok(Extension {
            base: base.clone(),
            field,
            degree: k,
            alpha,
            powers,
            to_alpha,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The extension field GF(q^k) itself.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// Coordinates of `y` in the ascending basis `1, alpha, ..., alpha^{k-1}`.
    pub fn expand(&self, y: Elem) -> Vec<Elem> {
        let f = &self.base;
        let c = digits(y, f.q(), self.degree);
        let mut out = vec![0; self.degree];
        for (ci, row) in c.iter().zip(&self.to_alpha) {
            if *ci == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*ci, r));
            }
        }
        out
    }

    /// Inverse of [`Extension::expand`].
    pub fn collapse(&self, coords: &[Elem]) -> Elem {
        let f = &self.base;
        let mut c = vec![0; self.degree];
        for (ai, row) in coords.iter().zip(&self.powers) {
            if *ai == 0 {
                continue;
            }
            for (o, &r) in c.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*ai, r));
            }
        }
        undigits(&c, f.q())
    }

    /// Matrix over the base field of `x -> beta * x`, acting on row vectors:
    /// row `j` holds the coordinates of `beta * b_j` in the same ordered basis.
    pub fn mult_matrix(&self, beta: Elem, order: BasisOrder) -> Matrix {
        let k = self.degree;
        let mut data = Vec::with_capacity(k * k);
        for j in 0..k {
            let exponent = match order {
                BasisOrder::Ascending => j,
                BasisOrder::Descending => k - 1 - j,
            };
            let bj = self.field.pow(self.alpha, exponent as u64);
            let mut coords = self.expand(self.field.mul(beta, bj));
            if order == BasisOrder::Descending {
                coords.reverse();
            }
            data.extend(coords);
        }
        Matrix::from_vec(self.base.clone(), k, k, data).expect("entries are base-field elements")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.modulus(), &[0, 1]);
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(3).unwrap(), 2);
        assert_eq!(f5.sub(1, 3), 3);
        assert!(f5.inv(0).is_err());
    }

    #[test]
    fn gf4_reduces_x_squared() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
    }

    /// Monic quadratics over GF(3) enumerated by encoding; the first without a
    /// root in GF(3) is x^2 + 1.
    #[test]
    fn gf9_modulus_is_smallest_rootless_quadratic() {
        let mut expected = None;
        'outer: for low in 0..9u32 {
            let (c0, c1) = (low % 3, low / 3);
            for a in 0..3 {
                if (a * a + c1 * a + c0) % 3 == 0 {
                    continue 'outer;
                }
            }
            expected = Some(vec![c0, c1, 1]);
            break;
        }
        let f = Field::new(3, 2).unwrap();
        assert_eq!(Some(f.modulus().to_vec()), expected);
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(Field::new(2, 21), Err(Error::FieldTooLarge(_))));
        assert!(Field::from_order(6).is_err());
        assert_eq!(prime_power(49), Some((7, 2)));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = Field::from_order(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let spec = f.spec();
        assert_eq!(Field::from_spec(&spec).unwrap(), f);
        let bad = FieldSpec {
            modulus: vec![2, 0, 1],
            ..spec
        };
        assert!(Field::from_spec(&bad).is_err());
    }

    #[test]
    fn extension_degree_one_over_gf2() {
        let f2 = Field::new(2, 1).unwrap();
        let ext = Extension::new(&f2, 1).unwrap();
        assert_eq!(ext.alpha(), 1);
        assert_eq!(ext.expand(1), vec![1]);
        assert_eq!(ext.expand(0), vec![0]);
    }

    #[test]
    fn alpha_has_full_order() {
        for (q, k) in [(2u64, 3usize), (2, 8), (3, 4), (4, 3), (5, 2), (2, 16)] {
            let base = Field::from_order(q).unwrap();
            let ext = Extension::new(&base, k).unwrap();
            let big = ext.field();
            let n = big.q() as u64 - 1;
            let mut x = ext.alpha();
            for i in 1..n {
                assert_ne!(x, 1, "alpha^{i} = 1 in GF({q}^{k})");
                x = big.mul(x, ext.alpha());
            }
            assert_eq!(x, 1);
        }
    }

    #[test]
    fn alpha_is_smallest_primitive() {
        let base = Field::new(2, 1).unwrap();
        let ext = Extension::new(&base, 4).unwrap();
        let big = ext.field();
        let order = |g: Elem| {
            let mut x = g;
            let mut n = 1;
            while x != 1 {
                x = big.mul(x, g);
                n += 1;
            }
            n
        };
        let first = (1..16).find(|&g| order(g) == 15).unwrap();
        assert_eq!(ext.alpha(), first);
    }

    #[test]
    fn expand_is_linear_bijection() {
        let base = Field::from_order(3).unwrap();
        let ext = Extension::new(&base, 3).unwrap();
        let big = ext.field();
        let mut seen = std::collections::HashSet::new();
        for y in big.elements() {
            let c = ext.expand(y);
            assert_eq!(ext.collapse(&c), y);
            assert!(seen.insert(c));
        }
        let a2 = big.pow(ext.alpha(), 2);
        assert_eq!(ext.expand(a2), vec![0, 0, 1]);
        for y in [5, 11, 17] {
            for z in [2, 9, 26] {
                let lhs = ext.expand(big.add(y, z));
                let rhs: Vec<_> = ext
                    .expand(y)
                    .iter()
                    .zip(ext.expand(z))
                    .map(|(&a, b)| base.add(a, b))
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mult_matrix_basics() {
        let base = Field::new(2, 1).unwrap();
        let ext = Extension::new(&base, 3).unwrap();
        let id = ext.mult_matrix(1, BasisOrder::Descending);
        assert_eq!(id, Matrix::identity(base.clone(), 3));
        assert!(ext.mult_matrix(0, BasisOrder::Ascending).is_zero());
        // Row for basis element 1 (last in descending order) is alpha: a single
        // one in the alpha column (middle).
        let m = ext.mult_matrix(ext.alpha(), BasisOrder::Descending);
        assert_eq!(m.row(2), &[0, 1, 0]);
    }

    #[test]
    fn mult_matrix_is_additive_injective_invertible() {
        let base = Field::from_order(3).unwrap();
        let ext = Extension::new(&base, 2).unwrap();
        let big = ext.field();
        let mut seen = std::collections::HashSet::new();
        for a in big.elements() {
            let ma = ext.mult_matrix(a, BasisOrder::Descending);
            assert!(seen.insert(ma.as_slice().to_vec()));
            if a != 0 {
                assert_eq!(ma.rank(), 2);
            }
            for b in big.elements() {
                let mb = ext.mult_matrix(b, BasisOrder::Descending);
                let sum = ext.mult_matrix(big.add(a, b), BasisOrder::Descending);
                assert_eq!(ma.add(&mb).unwrap(), sum);
            }
        }
    }
}
