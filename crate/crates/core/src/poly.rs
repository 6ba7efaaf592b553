//! Sparse multivariate polynomials over Gaussian rationals.
//!
//! Terms live in a `BTreeMap` keyed on exponent vectors; no zero coefficient
//! is ever stored. Every polynomial is immutable after construction and all
//! operations are pure functions.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::coeff::{gr_i, gr_real, is_real, rat_gcd, rat_to_f64, GaussRat, Rat};
use crate::error::PolyError;
use crate::monomial::{Monomial, MonomialOrder};
use crate::vars::VarRegistry;

#[derive(Debug, Clone)]
pub struct Polynomial {
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Monomial, GaussRat>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.registry == *other.registry && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(registry: &Arc<VarRegistry>) -> Self {
        Polynomial { registry: registry.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(registry: &Arc<VarRegistry>, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(registry.len()), c);
        }
        Polynomial { registry: registry.clone(), terms }
    }

    pub fn one(registry: &Arc<VarRegistry>) -> Self {
        Self::constant(registry, GaussRat::one())
    }

    pub fn var(registry: &Arc<VarRegistry>, name: &str) -> Result<Self, PolyError> {
        let idx = registry
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(registry.len(), idx, 1), GaussRat::one());
        Ok(Polynomial { registry: registry.clone(), terms })
    }

    pub fn from_terms(
        registry: &Arc<VarRegistry>,
        terms: impl IntoIterator<Item = (Monomial, GaussRat)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, GaussRat> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), registry.len(), "monomial arity mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Polynomial { registry: registry.clone(), terms: map }
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(is_real)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> Result<u32, PolyError> {
        let idx = self
            .registry
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.terms.keys().map(|m| m.exp(idx)).max().unwrap_or(0))
    }

    /// Indices of variables that occur with a positive exponent.
    pub fn used_var_indices(&self) -> Vec<usize> {
        (0..self.registry.len())
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    fn check_same_registry(&self, other: &Polynomial) -> Result<(), PolyError> {
        if *self.registry == *other.registry {
            Ok(())
        } else {
            Err(PolyError::RegistryMismatch {
                left: self.registry.joined(),
                right: other.registry.joined(),
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_registry(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + c.clone();
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Polynomial { registry: self.registry.clone(), terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.try_add(&other.clone().neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_registry(other)?;
        let mut acc: BTreeMap<Monomial, GaussRat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.try_mul(mb)?;
                let c = ca.clone() * cb.clone();
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().clone() + c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { registry: self.registry.clone(), terms: acc })
    }

    pub fn try_pow(&self, exp: u32) -> Result<Polynomial, PolyError> {
        let mut result = Polynomial::one(&self.registry);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, c: &GaussRat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.registry);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
            .collect();
        Polynomial { registry: self.registry.clone(), terms }
    }

    pub fn scale_rat(&self, c: &Rat) -> Polynomial {
        self.scale(&gr_real(c.clone()))
    }

    /// Formal partial derivative.
    pub fn derivative(&self, name: &str) -> Result<Polynomial, PolyError> {
        let idx = self
            .registry
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[idx] = e - 1;
            let coeff = c.clone() * gr_real(Rat::from_integer(e.into()));
            terms.insert(Monomial::from_exps(exps), coeff);
        }
        Ok(Polynomial { registry: self.registry.clone(), terms })
    }

    /// Exact composition. Bound variables are replaced by their images; any
    /// unbound variable must exist (by name) in the images' registry and maps
    /// to itself. All images must share one registry.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        for name in bindings.keys() {
            if self.registry.index_of(name).is_none() {
                return Err(PolyError::UnknownVariable(name.clone()));
            }
        }
        let target: Arc<VarRegistry> = match bindings.values().next() {
            Some(p) => {
                for q in bindings.values() {
                    p.check_same_registry(q)?;
                }
                p.registry.clone()
            }
            None => self.registry.clone(),
        };
        // Image (or identity) for each source variable.
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.registry.len());
        for name in self.registry.names() {
            match bindings.get(name) {
                Some(p) => images.push(p.clone()),
                None => images.push(Polynomial::var(&target, name)?),
            }
        }
        // Per-variable power cache, filled incrementally.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut power = |cache: &mut Vec<Vec<Polynomial>>, idx: usize, e: usize| -> Result<Polynomial, PolyError> {
            while cache[idx].len() <= e {
                let next = cache[idx].last().unwrap().try_mul(&cache[idx][1])?;
                cache[idx].push(next);
            }
            Ok(cache[idx][e].clone())
        };
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (idx, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let p = power(&mut powers, idx, e as usize)?;
                    t = t.try_mul(&p)?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_exact(&self, point: &[Rat]) -> Result<GaussRat, PolyError> {
        if point.len() != self.registry.len() {
            return Err(PolyError::ArityMismatch { got: point.len(), want: self.registry.len() });
        }
        let mut acc = GaussRat::zero();
        let mut powers: Vec<HashMap<u32, Rat>> = vec![HashMap::new(); point.len()];
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (idx, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers[idx]
                    .entry(e)
                    .or_insert_with(|| num_traits::pow::pow(point[idx].clone(), e as usize))
                    .clone();
                v = v * gr_real(p);
            }
            acc = acc + v;
        }
        Ok(acc)
    }

    /// Exact evaluation of a real polynomial at a rational point.
    pub fn eval_real_exact(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        let v = self.eval_exact(point)?;
        if !is_real(&v) || !self.is_real() {
            return Err(PolyError::NotReal(format!("{v}")));
        }
        Ok(v.re)
    }

    /// Double-precision evaluation of a real polynomial (not exact).
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        if point.len() != self.registry.len() {
            return Err(PolyError::ArityMismatch { got: point.len(), want: self.registry.len() });
        }
        if !self.is_real() {
            return Err(PolyError::NotReal("eval_f64".into()));
        }
        let mut acc = 0.0f64;
        for (m, c) in &self.terms {
            let mut v = rat_to_f64(&c.re);
            for (idx, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v *= point[idx].powi(e as i32);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Real and imaginary parts after substituting the single variable by
    /// `re_var + i*im_var`, treating both new variables as real.
    pub fn split_real_imag(
        &self,
        re_var: &str,
        im_var: &str,
    ) -> Result<(Polynomial, Polynomial), PolyError> {
        if self.registry.len() != 1 {
            return Err(PolyError::NotUnivariate(self.registry.len()));
        }
        let target = VarRegistry::new([re_var, im_var])?;
        let z = Polynomial::var(&target, re_var)?
            .try_add(&Polynomial::var(&target, im_var)?.scale(&gr_i()))?;
        let mut cache: Vec<Polynomial> = vec![Polynomial::one(&target), z];
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let e = m.exp(0) as usize;
            while cache.len() <= e {
                let next = cache.last().unwrap().try_mul(&cache[1])?;
                cache.push(next);
            }
            acc = acc.try_add(&cache[e].scale(c))?;
        }
        let re_terms: BTreeMap<Monomial, GaussRat> = acc
            .terms
            .iter()
            .filter(|(_, c)| !c.re.is_zero())
            .map(|(m, c)| (m.clone(), gr_real(c.re.clone())))
            .collect();
        let im_terms: BTreeMap<Monomial, GaussRat> = acc
            .terms
            .iter()
            .filter(|(_, c)| !c.im.is_zero())
            .map(|(m, c)| (m.clone(), gr_real(c.im.clone())))
            .collect();
        Ok((
            Polynomial { registry: target.clone(), terms: re_terms },
            Polynomial { registry: target, terms: im_terms },
        ))
    }

    /// Leading term under the given order.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &GaussRat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &GaussRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Positive rational content of a real polynomial (gcd of |coefficients|).
    pub fn rational_content(&self) -> Result<Rat, PolyError> {
        if !self.is_real() {
            return Err(PolyError::NotReal("content".into()));
        }
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, &c.re);
        }
        Ok(g)
    }

    /// Scale by a positive rational so coefficients are coprime integers, then
    /// fix the sign so the leading coefficient under `order` is positive.
    /// The result is the unique canonical representative of the scalar class.
    pub fn normalize_primitive_integer(
        &self,
        order: &MonomialOrder,
    ) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let content = self.rational_content()?;
        let mut p = self.scale_rat(&content.recip());
        let lead_negative = p
            .leading(order)
            .map(|(_, c)| c.re.is_negative())
            .unwrap_or(false);
        if lead_negative {
            p = p.neg();
        }
        Ok(p)
    }

    /// Map this polynomial into a larger registry containing all its variables.
    pub fn lift_to(&self, target: &Arc<VarRegistry>) -> Result<Polynomial, PolyError> {
        let map: Vec<usize> = self
            .registry
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| PolyError::UnknownVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.len()];
                for (src, &dst) in map.iter().enumerate() {
                    exps[dst] = m.exp(src);
                }
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Ok(Polynomial { registry: target.clone(), terms })
    }

    /// Project onto a smaller registry; every variable actually used must be
    /// present in the target.
    pub fn restrict_to(&self, target: &Arc<VarRegistry>) -> Result<Polynomial, PolyError> {
        let used = self.used_var_indices();
        let map: Vec<Option<usize>> = self
            .registry
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        for &idx in &used {
            if map[idx].is_none() {
                return Err(PolyError::UnknownVariable(self.registry.name(idx).to_string()));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.len()];
                for (src, dst) in map.iter().enumerate() {
                    if let Some(d) = dst {
                        exps[*d] = m.exp(src);
                    }
                }
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Ok(Polynomial { registry: target.clone(), terms })
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        Polynomial { registry: self.registry, terms }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try_method:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try_method(rhs).expect("polynomial registry mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::text::poly_body(self, &MonomialOrder::Grevlex))
    }
}
