use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_prime, same_ring, CoefficientDomain, Monomial, Ring};
use crate::error::{Error, Result};

pub type Term = (Monomial, BigInt);

/// Exact sparse polynomial; terms sorted descending, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn arith(kind: ArithKind, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    match kind {
        ArithKind::Add => a.checked_add(b),
        ArithKind::Sub => a.checked_sub(b),
        ArithKind::Mul => a.checked_mul(b),
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Ring, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, mono: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(mono.exponents().len(), ring.nvars(), "monomial length mismatch");
        let c = ring.normalize(c.into());
        let terms = if c.is_zero() { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), position: 0 })?;
        Ok(Self::monomial(ring, Monomial::variable(ring.nvars(), idx, 1), 1))
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), ring.nvars(), "monomial length mismatch");
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_accumulator(ring, acc)
    }

    fn from_accumulator(ring: &Ring, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = ring.normalize(c);
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        terms.sort_by(|a, b| ring.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts that `terms` are already sorted, normalized and nonzero.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].0, &w[1].0).is_gt()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `mono` (zero if absent).
    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(m, _)| self.ring.compare(mono, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Maximum total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Largest exponent of variable `index` over all terms.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[index]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, &BigInt::one(), None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, &-BigInt::one(), None))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * m * other`, computed by a single ordered merge.
    pub fn add_scaled(&self, c: &BigInt, m: &Monomial, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        self.merge(other, c, Some(m))
    }

    fn merge(&self, other: &Polynomial, c: &BigInt, shift: Option<&Monomial>) -> Polynomial {
        let ring = &self.ring;
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let scaled = |(m, d): &Term| -> Term {
            let m = match shift {
                Some(s) => m.mul(s),
                None => m.clone(),
            };
            (m, d * c)
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(scaled).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, d) = b.next().unwrap();
                    let d = ring.normalize(d);
                    if !d.is_zero() {
                        out.push((m, d));
                    }
                }
                (Some(x), Some(y)) => match ring.compare(&x.0, &y.0) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        let (m, d) = b.next().unwrap();
                        let d = ring.normalize(d);
                        if !d.is_zero() {
                            out.push((m, d));
                        }
                    }
                    std::cmp::Ordering::Equal => {
                        let (m, d) = b.next().unwrap();
                        let s = ring.normalize(&a.next().unwrap().1 + d);
                        if !s.is_zero() {
                            out.push((m, s));
                        }
                    }
                },
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(ring);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(large.terms.len() * small.terms.len().min(64));
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let prod = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        Self::from_accumulator(ring, acc)
    }

    /// `c * m * self`; monomial orders are multiplicative so no re-sort.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        let ring = &self.ring;
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, d)| {
                let d = ring.normalize(d * c);
                (!d.is_zero()).then(|| (mm.mul(m), d))
            })
            .collect();
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn power(&self, n: u32) -> Polynomial {
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Polynomial::monomial(&self.ring, m.pow(n), c.pow(n));
        }
        let mut result: Option<Polynomial> = None;
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul_impl(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_impl(&base);
        }
        result.unwrap()
    }

    /// Divides every coefficient by `m`; fails on the first term that is not
    /// divisible.
    pub fn exact_div_int(&self, m: &BigInt) -> Result<Polynomial> {
        if !self.ring.is_integral() {
            return Err(Error::DomainMismatch { expected: "ZZ" });
        }
        if m.is_zero() {
            return Err(Error::NotDivisible { divisor: "0".into(), term: "division by zero".into() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (mono, c) in &self.terms {
            let (q, r) = c.div_rem(m);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    divisor: m.to_string(),
                    term: Polynomial::monomial(&self.ring, mono.clone(), c.clone()).to_string(),
                });
            }
            terms.push((mono.clone(), q));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Coefficientwise image in 𝔽_p[same variables].
    pub fn mod_reduce(&self, p: u64) -> Result<Polynomial> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !self.ring.is_integral() {
            return Err(Error::DomainMismatch { expected: "ZZ" });
        }
        let target = self.ring.with_domain(CoefficientDomain::PrimeField(p))?;
        Ok(self.reduce_into(&target))
    }

    /// Coefficientwise image in `target`, which must share the variable list
    /// and order (e.g. a cached 𝔽_p ring).
    pub(crate) fn reduce_into(&self, target: &Ring) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let c = target.normalize(c.clone());
                (!c.is_zero()).then(|| (m.clone(), c))
            })
            .collect();
        Polynomial { ring: target.clone(), terms }
    }

    /// Lifts 𝔽_p residues back to ℤ representatives in [0, p).
    pub fn lift_to_integers(&self) -> Result<Polynomial> {
        let target = self.ring.with_domain(CoefficientDomain::Integers)?;
        Ok(Polynomial { ring: target, terms: self.terms.clone() })
    }

    /// True when every coefficient is divisible by `p`.
    pub fn is_zero_mod(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.terms.iter().all(|(_, c)| c.is_multiple_of(&p))
    }

    /// Image under the ring map sending each variable to the given polynomial.
    /// Every variable occurring in `self` needs an image in `target`.
    pub fn substitute(&self, assignment: &BTreeMap<String, Polynomial>, target: &Ring) -> Result<Polynomial> {
        for img in assignment.values() {
            if !same_ring(img.ring(), target) {
                return Err(Error::RingMismatch(format!("image in {} but target is {}", img.ring(), target)));
            }
        }
        let nvars = self.ring.nvars();
        let mut images: Vec<Option<&Polynomial>> = vec![None; nvars];
        for (i, name) in self.ring.variables().iter().enumerate() {
            images[i] = assignment.get(name);
            if images[i].is_none() && self.degree_in(i) > 0 {
                return Err(Error::UnassignedVariable(name.clone()));
            }
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].unwrap().power(e))
                    .clone();
                term = term.mul_impl(&pw);
            }
            acc = acc.merge(&term, &BigInt::one(), None);
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in a ring that contains all of its live
    /// variables (matched by name) and has the same coefficient domain.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.domain() != target.domain() {
            return Err(Error::RingMismatch(format!("cannot embed {} into {}", self.ring, target)));
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.variables().iter().enumerate() {
            match target.var_index(name) {
                Some(j) => map.push(Some(j)),
                None if self.degree_in(i) == 0 => map.push(None),
                None => return Err(Error::UnknownVariable { name: name.clone(), position: 0 }),
            }
        }
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial::new(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient by `divisor`, or `None` when it does not divide.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some((dm, dc)) = divisor.leading_term() else {
            return Err(Error::NotDivisible { divisor: "0".into(), term: "division by zero".into() });
        };
        let ring = &self.ring;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = dm.divide_into(m) else { return Ok(None) };
            let qc = if ring.is_integral() {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Ok(None);
                }
                q
            } else {
                ring.normalize(c * ring.inverse(dc).expect("nonzero leading coefficient"))
            };
            rem = rem.add_scaled(&ring.normalize(-&qc), &qm, divisor);
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_sorted_unchecked(ring, quot)))
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Multiplies by a unit so the leading coefficient is 1 (fields) or
    /// positive (ℤ).
    pub fn normalized(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => match self.ring.domain() {
                CoefficientDomain::Integers if lc.is_negative() => self.scale(&-BigInt::one()),
                CoefficientDomain::Integers => self.clone(),
                CoefficientDomain::PrimeField(_) => self.scale(&self.ring.inverse(lc).unwrap()),
            },
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}
