use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::algebraic::{RationalInterval, RealAlgebraicNumber};
use super::factor::factor;
use super::linalg::faddeev_leverrier;
use super::poly::IntPolynomial;
use super::qpoly::QPolynomial;
use super::roots::real_roots;
use super::Rational;
use crate::error::{Error, Result};

/// Working precision of the cached root enclosure, in bits.
const BASE_BITS: u32 = 64;
/// Extra bits requested each time an enclosure is too coarse.
const STEP_BITS: u32 = 32;

/// `Q[x]/(p)` for a monic irreducible `p`, together with a designated real
/// root of `p` that fixes the embedding into the reals.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    modulus: IntPolynomial,
    modulus_q: QPolynomial,
    root: RealAlgebraicNumber,
}

impl NumberField {
    /// `p` must be monic and irreducible (checked for degree <= 4; larger
    /// degrees are accepted unchecked) and `root` must be one of its roots.
    pub fn new(p: IntPolynomial, root: RealAlgebraicNumber) -> Result<Arc<Self>> {
        if !p.is_monic() || p.is_constant() {
            return Err(Error::InvalidPolynomial(format!("{p} is not a monic nonconstant polynomial")));
        }
        if p.degree().unwrap() <= 4 {
            let f = factor(&p);
            if f.factors.len() != 1 || f.factors[0].1 != 1 {
                return Err(Error::Reducible(p.to_string()));
            }
        }
        let root = RealAlgebraicNumber::from_isolating_interval(p.clone(), root.lo().clone(), root.hi().clone())?
            .refine_bits(BASE_BITS);
        Ok(Arc::new(NumberField { modulus_q: p.to_qpoly(), modulus: p, root }))
    }

    /// Field generated by the `index`-th real root (ascending) of `p`.
    pub fn from_real_root(p: IntPolynomial, index: usize) -> Result<Arc<Self>> {
        let roots = real_roots(&p);
        let root = roots
            .get(index)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("{p} has no real root #{index}")))?;
        Self::new(p, root)
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    /// The designated real root (the image of the generator).
    pub fn root(&self) -> &RealAlgebraicNumber {
        &self.root
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({}) @ {:.10}", self.modulus, self.root.to_f64())
    }
}

/// Element of a [`NumberField`], stored as its reduced residue polynomial.
#[derive(Clone)]
pub struct NumberFieldElement {
    field: Arc<NumberField>,
    rep: QPolynomial,
}

impl NumberFieldElement {
    pub fn from_poly(field: &Arc<NumberField>, p: &QPolynomial) -> Self {
        NumberFieldElement { field: field.clone(), rep: p.rem(&field.modulus_q) }
    }

    /// Element with coordinates `coords` in the power basis `1, a, a^2, ...`.
    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        Self::from_poly(field, &QPolynomial::new(coords))
    }

    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> Self {
        Self::from_poly(field, &QPolynomial::constant(r))
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from(BigInt::from(n)))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        NumberFieldElement { field: field.clone(), rep: QPolynomial::zero() }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 1)
    }

    /// The class of `x`, i.e. the designated root.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &QPolynomial::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn residue(&self) -> &QPolynomial {
        &self.rep
    }

    /// Coordinate vector of length `deg(p)`.
    pub fn coords(&self) -> Vec<Rational> {
        (0..self.field.degree()).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep == QPolynomial::one()
    }

    /// `Some(r)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (g, s, _) = self.rep.ext_gcd(&self.field.modulus_q);
        if !g.is_constant() {
            return Err(Error::NotInvertible);
        }
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    pub fn scale(&self, r: &Rational) -> Self {
        NumberFieldElement { field: self.field.clone(), rep: self.rep.scale(r) }
    }

    /// Interval enclosure of the real embedding using `root`'s interval.
    fn enclose_with(&self, root: &RealAlgebraicNumber) -> RationalInterval {
        RationalInterval::eval(&self.rep, &root.interval())
    }

    /// Enclosure of the real value with width at most `width`.
    pub fn enclosure(&self, width: &Rational) -> RationalInterval {
        if let Some(r) = self.as_rational() {
            return RationalInterval::point(r);
        }
        let mut root = self.field.root.clone();
        let mut bits = BASE_BITS;
        loop {
            let iv = self.enclose_with(&root);
            if &iv.width() <= width {
                return iv;
            }
            bits += STEP_BITS;
            root = root.refine_bits(bits);
        }
    }

    /// Sign of the real embedding; exact, terminates because nonzero
    /// elements have nonzero real value.
    pub fn sign(&self) -> Ordering {
        if let Some(r) = self.as_rational() {
            return r.cmp(&Rational::zero());
        }
        let mut root = self.field.root.clone();
        let mut bits = BASE_BITS;
        loop {
            if let Some(s) = self.enclose_with(&root).sign() {
                return s;
            }
            bits += STEP_BITS;
            root = root.refine_bits(bits);
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Compares real embeddings.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }

    /// Greatest integer not exceeding the real embedding. Elements that are
    /// rational are resolved symbolically; irrational elements never sit on
    /// an integer, so refinement always terminates.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        let mut root = self.field.root.clone();
        let mut bits = BASE_BITS;
        loop {
            let iv = self.enclose_with(&root);
            let (lo, hi) = (iv.lo.floor(), iv.hi.floor());
            if lo == hi {
                return lo.to_integer();
            }
            bits += STEP_BITS;
            root = root.refine_bits(bits);
        }
    }

    /// Smallest integer not below the real embedding.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Matrix of multiplication by this element in the power basis.
    fn multiplication_matrix(&self) -> Vec<Rational> {
        let n = self.field.degree();
        let mut m = vec![Rational::zero(); n * n];
        let mut basis = Self::one(&self.field);
        let gen = Self::generator(&self.field);
        for j in 0..n {
            let col = (self * &basis).coords();
            for (i, c) in col.into_iter().enumerate() {
                m[i * n + j] = c;
            }
            basis = &basis * &gen;
        }
        m
    }

    /// Primitive integer minimal polynomial with positive leading
    /// coefficient.
    pub fn minimal_polynomial(&self) -> IntPolynomial {
        let n = self.field.degree();
        let cp = faddeev_leverrier(n, &self.multiplication_matrix());
        // the characteristic polynomial is a power of the minimal polynomial
        cp.to_primitive_integer().square_free_part()
    }

    /// The real embedding as an isolated real algebraic number.
    pub fn to_real_algebraic(&self) -> RealAlgebraicNumber {
        if let Some(r) = self.as_rational() {
            return RealAlgebraicNumber::from_rational(&r);
        }
        let mp = self.minimal_polynomial();
        let mut candidates = real_roots(&mp);
        let mut width = Rational::new(BigInt::one(), BigInt::from(1u64 << 20));
        loop {
            let iv = self.enclosure(&width);
            let hits: Vec<usize> =
                candidates.iter().enumerate().filter(|(_, c)| c.interval().intersects(&iv)).map(|(i, _)| i).collect();
            if hits.len() == 1 {
                return candidates.swap_remove(hits[0]);
            }
            candidates = candidates.iter().map(|c| c.refine_bits(bits_of(&width) + 2)).collect();
            width /= Rational::from(BigInt::from(1u64 << 16));
        }
    }

    pub fn to_f64(&self) -> f64 {
        let iv = self.enclosure(&Rational::new(BigInt::one(), BigInt::from(1u64 << 60)));
        ((iv.lo + iv.hi) / Rational::from(BigInt::from(2))).to_f64().unwrap_or(f64::NAN)
    }

    fn same_field(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.field, &other.field) || self.field == other.field, "number field mismatch");
    }
}

fn bits_of(width: &Rational) -> u32 {
    // width is 2^-k
    (width.denom().bits() - 1) as u32
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.rep == other.rep
    }
}

impl Eq for NumberFieldElement {}

impl Hash for NumberFieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl<'a> Add<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn add(self, rhs: &NumberFieldElement) -> NumberFieldElement {
        self.same_field(rhs);
        NumberFieldElement { field: self.field.clone(), rep: &self.rep + &rhs.rep }
    }
}

impl<'a> Sub<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn sub(self, rhs: &NumberFieldElement) -> NumberFieldElement {
        self.same_field(rhs);
        NumberFieldElement { field: self.field.clone(), rep: &self.rep - &rhs.rep }
    }
}

impl<'a> Mul<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn mul(self, rhs: &NumberFieldElement) -> NumberFieldElement {
        self.same_field(rhs);
        NumberFieldElement::from_poly(&self.field, &(&self.rep * &rhs.rep))
    }
}

impl Neg for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn neg(self) -> NumberFieldElement {
        NumberFieldElement { field: self.field.clone(), rep: -&self.rep }
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] ~ {:.10}", coords.join(", "), self.to_f64())
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberFieldElement({self})")
    }
}

/// Integer part of the real embedding of `x`.
pub fn field_floor(x: &NumberFieldElement) -> BigInt {
    x.floor()
}
