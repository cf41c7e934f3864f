//! Completion loop shared by the field and integer cases.
//!
//! Every basis element carries its representation over the input
//! generators. Reductions record one quotient polynomial per reducer; the
//! representation of a new element is only assembled if the element survives,
//! so pairs that reduce to zero cost no cofactor arithmetic.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::grading::Grading;
use super::GbConfig;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Ring, Term};

#[derive(Debug, Clone)]
pub(crate) struct Elem {
    pub poly: Polynomial,
    /// `poly = Σ cof[j] * generators[j]`
    pub cof: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub(crate) struct Truncation {
    pub grading: Grading,
    pub bound: Vec<u64>,
}

impl Truncation {
    pub fn admits(&self, m: &Monomial) -> bool {
        self.grading.within(m, &self.bound)
    }
}

/// Quotients collected by a reduction, one polynomial per basis index.
pub(crate) type Quotients = Vec<(usize, Polynomial)>;

pub(crate) struct Engine<'a> {
    ring: Ring,
    integral: bool,
    ngens: usize,
    config: &'a GbConfig,
    truncation: Option<&'a Truncation>,
    basis: Vec<Elem>,
    lead: Vec<(Monomial, BigInt)>,
    pairs: BinaryHeap<Reverse<(u32, usize, usize)>>,
    processed: usize,
}

impl<'a> Engine<'a> {
    pub fn new(ring: &Ring, ngens: usize, config: &'a GbConfig, truncation: Option<&'a Truncation>) -> Self {
        Engine {
            ring: ring.clone(),
            integral: ring.is_integral(),
            ngens,
            config,
            truncation,
            basis: Vec::new(),
            lead: Vec::new(),
            pairs: BinaryHeap::new(),
            processed: 0,
        }
    }

    /// Installs an already completed basis (for reductions only).
    pub fn load(&mut self, basis: &[Polynomial], reps: &[Vec<Polynomial>]) {
        for (p, r) in basis.iter().zip(reps) {
            self.lead.push(p.leading_term().cloned().expect("nonzero basis element"));
            self.basis.push(Elem { poly: p.clone(), cof: r.clone() });
        }
    }

    pub fn into_basis(self) -> Vec<Elem> {
        self.basis
    }

    fn zero_cof(&self) -> Vec<Polynomial> {
        vec![Polynomial::zero(&self.ring); self.ngens]
    }

    /// Index, quotient monomial and coefficient of the first basis element
    /// whose leading term divides `c*m`.
    fn find_reducer(&self, m: &Monomial, c: &BigInt, skip: Option<usize>) -> Option<(usize, Monomial, BigInt)> {
        for (i, (lm, lc)) in self.lead.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let Some(q) = lm.divide_into(m) else { continue };
            if self.integral {
                let (qc, r) = c.div_rem(lc);
                if r.is_zero() {
                    return Some((i, q, qc));
                }
            } else {
                let inv = self.ring.inverse(lc).expect("field leading coefficient");
                return Some((i, q, self.ring.normalize(c * inv)));
            }
        }
        None
    }

    /// Reduces `f` against the current basis. With `full` every term is
    /// reduced, otherwise only leading terms. Returns the remainder and the
    /// quotients so that `f = remainder + Σ quotient_i * basis_i`.
    pub fn reduce(&self, f: &Polynomial, full: bool, skip: Option<usize>) -> Result<(Polynomial, Quotients)> {
        let ring = &self.ring;
        // working copy in ascending order so the leading term pops cheaply
        let mut work: Vec<Term> = f.terms().iter().rev().cloned().collect();
        let mut rem: Vec<Term> = Vec::new();
        let mut quots: Vec<Vec<Term>> = vec![Vec::new(); self.basis.len()];
        let mut steps = 0usize;
        while let Some((m, c)) = work.last() {
            match self.find_reducer(m, c, skip) {
                Some((i, qm, qc)) => {
                    work = sub_scaled_ascending(ring, &work, &qc, &qm, &self.basis[i].poly);
                    quots[i].push((qm, qc));
                    steps += 1;
                    if work.len() > self.config.max_terms {
                        return Err(Error::ResourceBound(format!(
                            "intermediate polynomial exceeded {} terms",
                            self.config.max_terms
                        )));
                    }
                    if steps > self.config.max_reduction_steps {
                        return Err(Error::ResourceBound(format!(
                            "reduction exceeded {} steps",
                            self.config.max_reduction_steps
                        )));
                    }
                }
                None => {
                    if !full {
                        rem.extend(work.drain(..).rev());
                        break;
                    }
                    rem.push(work.pop().unwrap());
                }
            }
        }
        let quotients = quots
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_empty())
            .map(|(i, q)| (i, Polynomial::from_sorted_unchecked(ring, q)))
            .collect();
        Ok((Polynomial::from_sorted_unchecked(ring, rem), quotients))
    }

    /// `Σ quotient_i * cof(basis_i)` over the generators.
    pub fn expand_quotients(&self, quotients: &Quotients) -> Vec<Polynomial> {
        let mut out = self.zero_cof();
        for (i, q) in quotients {
            for (j, c) in self.basis[*i].cof.iter().enumerate() {
                if !c.is_zero() {
                    out[j] = &out[j] + &(q * c);
                }
            }
        }
        out
    }

    fn admits(&self, m: &Monomial) -> bool {
        self.truncation.is_none_or(|t| t.admits(m))
    }

    /// Adds a generator with its unit representation.
    pub fn add_generator(&mut self, index: usize, g: &Polynomial) -> Result<()> {
        let Some(lm) = g.leading_monomial() else { return Ok(()) };
        if !self.admits(lm) {
            return Ok(());
        }
        let mut cof = self.zero_cof();
        cof[index] = Polynomial::one(&self.ring);
        self.insert(Elem { poly: g.clone(), cof })
    }

    fn insert(&mut self, e: Elem) -> Result<()> {
        let lc = e.poly.leading_coefficient().expect("nonzero element").clone();
        let unit = if self.integral {
            if lc.is_negative() { Some(-BigInt::one()) } else { None }
        } else if lc.is_one() {
            None
        } else {
            self.ring.inverse(&lc)
        };
        let e = match unit {
            None => e,
            Some(u) => Elem {
                poly: e.poly.scale(&u),
                cof: e.cof.iter().map(|c| c.scale(&u)).collect(),
            },
        };
        let (lm, lc) = e.poly.leading_term().cloned().unwrap();
        if lm.degree() > self.config.max_degree {
            return Err(Error::ResourceBound(format!(
                "basis element of degree {} exceeds cap {}",
                lm.degree(),
                self.config.max_degree
            )));
        }
        if e.poly.num_terms() > self.config.max_terms {
            return Err(Error::ResourceBound(format!("basis element exceeded {} terms", self.config.max_terms)));
        }
        let k = self.basis.len();
        for (i, (lmi, _)) in self.lead.iter().enumerate() {
            let l = lmi.lcm(&lm);
            if self.admits(&l) {
                self.pairs.push(Reverse((l.degree(), i, k)));
            }
        }
        self.basis.push(e);
        self.lead.push((lm, lc));
        Ok(())
    }

    /// Candidate polynomials for a pair: the S-polynomial and, over ℤ, the
    /// gcd-polynomial. Each comes with its two monomial multipliers.
    fn pair_polys(&self, i: usize, j: usize) -> Vec<[(BigInt, Monomial); 2]> {
        let (mi, ci) = &self.lead[i];
        let (mj, cj) = &self.lead[j];
        let l = mi.lcm(mj);
        let ui = mi.divide_into(&l).unwrap();
        let uj = mj.divide_into(&l).unwrap();
        let coprime_monos = mi.is_coprime(mj);
        let mut out = Vec::new();
        if !self.integral {
            if !coprime_monos {
                // elements are monic
                out.push([(BigInt::one(), ui), (-BigInt::one(), uj)]);
            }
            return out;
        }
        let ext = ci.extended_gcd(cj);
        let g = ext.gcd;
        let lcm = (ci / &g) * cj;
        if !(coprime_monos && g.is_one()) {
            out.push([(&lcm / ci, ui.clone()), (-(&lcm / cj), uj.clone())]);
        }
        let divides = ci.is_multiple_of(cj) || cj.is_multiple_of(ci);
        if !divides {
            out.push([(ext.x, ui), (ext.y, uj)]);
        }
        out
    }

    pub fn complete(&mut self) -> Result<()> {
        while let Some(Reverse((_, i, j))) = self.pairs.pop() {
            self.processed += 1;
            if self.processed > self.config.max_pairs {
                return Err(Error::ResourceBound(format!("more than {} pairs", self.config.max_pairs)));
            }
            for [(ai, mi), (aj, mj)] in self.pair_polys(i, j) {
                let fi = &self.basis[i].poly;
                let fj = &self.basis[j].poly;
                let s = fi.mul_term(&ai, &mi).add_scaled(&aj, &mj, fj);
                if s.is_zero() {
                    continue;
                }
                let (rem, quots) = self.reduce(&s, false, None)?;
                if rem.is_zero() {
                    continue;
                }
                let mut cof = self.zero_cof();
                for (t, (a, m)) in [(i, (&ai, &mi)), (j, (&aj, &mj))] {
                    for (c, src) in cof.iter_mut().zip(&self.basis[t].cof) {
                        if !src.is_zero() {
                            *c = c.add_scaled(a, m, src);
                        }
                    }
                }
                let sub = self.expand_quotients(&quots);
                for (c, q) in cof.iter_mut().zip(&sub) {
                    if !q.is_zero() {
                        *c = &*c - q;
                    }
                }
                self.insert(Elem { poly: rem, cof })?;
            }
        }
        Ok(())
    }

    fn lt_divides(&self, a: usize, b: usize) -> bool {
        let (ma, ca) = &self.lead[a];
        let (mb, cb) = &self.lead[b];
        ma.divides(mb) && (!self.integral || cb.is_multiple_of(ca))
    }

    /// Drops elements with redundant leading terms, sorts by descending
    /// leading monomial and tail-reduces.
    pub fn interreduce(&mut self) -> Result<()> {
        let n = self.basis.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i && self.lt_divides(j, i) && (!self.lt_divides(i, j) || j < i)
                })
            })
            .collect();
        let mut kept: Vec<Elem> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        kept.sort_by(|a, b| {
            self.ring.compare(b.poly.leading_monomial().unwrap(), a.poly.leading_monomial().unwrap())
        });
        self.lead = kept.iter().map(|e| e.poly.leading_term().cloned().unwrap()).collect();
        self.basis = kept;
        self.pairs.clear();
        for i in 0..self.basis.len() {
            let (rem, quots) = self.reduce(&self.basis[i].poly, true, Some(i))?;
            if quots.is_empty() {
                continue;
            }
            let sub = self.expand_quotients(&quots);
            let cof = self.basis[i].cof.iter().zip(&sub).map(|(c, q)| c - q).collect();
            self.basis[i] = Elem { poly: rem, cof };
        }
        Ok(())
    }
}

/// `work - c * m * g` where `work` is ascending and `g` descending; result
/// ascending.
fn sub_scaled_ascending(ring: &Ring, work: &[Term], c: &BigInt, m: &Monomial, g: &Polynomial) -> Vec<Term> {
    let mut out = Vec::with_capacity(work.len() + g.num_terms());
    let mut a = work.iter().peekable();
    let mut b = g.terms().iter().rev().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    let push = |out: &mut Vec<Term>, t: Term| {
        let v = ring.normalize(t.1);
        if !v.is_zero() {
            out.push((t.0, v));
        }
    };
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap().clone()),
            (None, Some(_)) => {
                let (bm, bc) = b.next().unwrap();
                push(&mut out, (bm, -bc));
            }
            (Some(x), Some(y)) => match ring.compare(&x.0, &y.0) {
                std::cmp::Ordering::Less => out.push(a.next().unwrap().clone()),
                std::cmp::Ordering::Greater => {
                    let (bm, bc) = b.next().unwrap();
                    push(&mut out, (bm, -bc));
                }
                std::cmp::Ordering::Equal => {
                    let (bm, bc) = b.next().unwrap();
                    let ac = &a.next().unwrap().1;
                    push(&mut out, (bm, ac - bc));
                }
            },
        }
    }
    out
}
