//! Polynomial gcd via subresultant polynomial-remainder sequences, exact
//! division, contents, and squarefree parts.

use num_traits::Zero;

use crate::coeff::GaussRat;
use crate::error::PolyError;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Exact quotient `p / d`; fails if the division leaves a remainder.
pub fn exact_div(p: &Polynomial, d: &Polynomial) -> Result<Polynomial, PolyError> {
    if d.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    let order = MonomialOrder::Grevlex;
    let (dm, dc) = {
        let (m, c) = d.leading(&order).unwrap();
        (m.clone(), c.clone())
    };
    let mut rest = p.clone();
    let mut quot = Polynomial::zero(p.registry());
    while !rest.is_zero() {
        let (rm, rc) = {
            let (m, c) = rest.leading(&order).unwrap();
            (m.clone(), c.clone())
        };
        let qm = rm.checked_div(&dm).ok_or_else(|| {
            PolyError::DivisionNotExact(crate::text::poly_body(&rest, &order))
        })?;
        let qc = rc / dc.clone();
        let t = Polynomial::from_terms(p.registry(), [(qm, qc)]);
        quot = quot.try_add(&t)?;
        rest = rest.try_sub(&t.try_mul(d)?)?;
    }
    Ok(quot)
}

/// Coefficients of `p` viewed as a univariate in `var`, dense by degree.
/// Each entry is free of `var`.
pub fn coeffs_wrt(p: &Polynomial, var: &str) -> Result<Vec<Polynomial>, PolyError> {
    let idx = p
        .registry()
        .index_of(var)
        .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
    let deg = p.degree_in(var)? as usize;
    let mut out = vec![Polynomial::zero(p.registry()); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp(idx) as usize;
        let mut exps = m.exps().to_vec();
        exps[idx] = 0;
        let t = Polynomial::from_terms(p.registry(), [(Monomial::from_exps(exps), c.clone())]);
        out[e] = out[e].try_add(&t)?;
    }
    Ok(out)
}

fn deg_wrt(p: &Polynomial, idx: usize) -> u32 {
    p.terms().map(|(m, _)| m.exp(idx)).max().unwrap_or(0)
}

/// Leading coefficient of `p` w.r.t. `var` (free of `var`).
fn lc_wrt(p: &Polynomial, var: &str, idx: usize) -> Result<Polynomial, PolyError> {
    let d = deg_wrt(p, idx);
    let terms: Vec<(Monomial, GaussRat)> = p
        .terms()
        .filter(|(m, _)| m.exp(idx) == d)
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps[idx] = 0;
            (Monomial::from_exps(exps), c.clone())
        })
        .collect();
    let _ = var;
    Ok(Polynomial::from_terms(p.registry(), terms))
}

/// Pseudo-remainder of `a` by `b` w.r.t. `var`: lc(b)^(deg a - deg b + 1) * a  mod  b.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: &str) -> Result<Polynomial, PolyError> {
    let idx = a.registry().index_of(var).unwrap();
    let db = deg_wrt(b, idx);
    let lcb = lc_wrt(b, var, idx)?;
    let mut r = a.clone();
    let mut e = (deg_wrt(a, idx) as i64) - (db as i64) + 1;
    loop {
        if r.is_zero() {
            break;
        }
        let dr = deg_wrt(&r, idx);
        if dr < db {
            break;
        }
        let lcr = lc_wrt(&r, var, idx)?;
        let shift = Polynomial::from_terms(
            r.registry(),
            [(Monomial::var(r.registry().len(), idx, dr - db), GaussRat::one())],
        );
        r = r.try_mul(&lcb)?.try_sub(&lcr.try_mul(&shift)?.try_mul(b)?)?;
        e -= 1;
    }
    let mut result = r;
    while e > 0 {
        result = result.try_mul(&lcb)?;
        e -= 1;
    }
    Ok(result)
}

/// Content of `p` w.r.t. `var`: gcd of its `var`-coefficients (canonical,
/// primitive integer, positive leading coefficient under grevlex).
pub fn content_wrt(p: &Polynomial, var: &str) -> Result<Polynomial, PolyError> {
    let mut g = Polynomial::zero(p.registry());
    for c in coeffs_wrt(p, var)? {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.normalize_primitive_integer(&MonomialOrder::Grevlex)? } else { gcd(&g, &c)? };
        if g.is_constant() {
            break;
        }
    }
    if g.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    if g.is_constant() {
        return Ok(Polynomial::one(p.registry()));
    }
    Ok(g)
}

/// Primitive part of `p` w.r.t. `var`.
pub fn primitive_part_wrt(p: &Polynomial, var: &str) -> Result<Polynomial, PolyError> {
    let c = content_wrt(p, var)?;
    exact_div(p, &c)
}

/// Polynomial gcd over the rationals (real coefficients required), canonical:
/// primitive integer coefficients with a positive grevlex-leading coefficient.
///
/// Multivariate inputs recurse through contents and a subresultant PRS on the
/// variable of lowest maximal degree among those actually present.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    if !a.is_real() || !b.is_real() {
        return Err(PolyError::NotReal("gcd".into()));
    }
    let order = MonomialOrder::Grevlex;
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    if a.is_zero() {
        return b.normalize_primitive_integer(&order);
    }
    if b.is_zero() {
        return a.normalize_primitive_integer(&order);
    }
    if a.is_constant() || b.is_constant() {
        // Nonzero constants are units over the rationals.
        return Ok(Polynomial::one(a.registry()));
    }
    a.try_add(b)?; // registry compatibility check
    let names = a.registry().names();
    let mut best: Option<(usize, u32)> = None;
    for idx in 0..names.len() {
        let da = deg_wrt(a, idx);
        let db = deg_wrt(b, idx);
        if da == 0 && db == 0 {
            continue;
        }
        let key = da.max(db);
        if best.map(|(_, k)| key < k).unwrap_or(true) {
            best = Some((idx, key));
        }
    }
    let (vidx, _) = best.expect("non-constant polynomials must use a variable");
    let var = names[vidx].clone();

    let cont_a = content_wrt(a, &var)?;
    let cont_b = content_wrt(b, &var)?;
    let pp_a = exact_div(a, &cont_a)?;
    let pp_b = exact_div(b, &cont_b)?;
    let g_cont = gcd(&cont_a, &cont_b)?;
    let g_pp = subresultant_gcd(&pp_a, &pp_b, &var, vidx)?;
    g_cont.try_mul(&g_pp)?.normalize_primitive_integer(&order)
}

/// Subresultant PRS gcd of two polynomials primitive w.r.t. `var`.
fn subresultant_gcd(
    pa: &Polynomial,
    pb: &Polynomial,
    var: &str,
    vidx: usize,
) -> Result<Polynomial, PolyError> {
    let (mut a, mut b) = if deg_wrt(pa, vidx) >= deg_wrt(pb, vidx) {
        (pa.clone(), pb.clone())
    } else {
        (pb.clone(), pa.clone())
    };
    let one = Polynomial::one(pa.registry());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        if b.is_zero() {
            return primitive_part_wrt(&a, var);
        }
        if deg_wrt(&b, vidx) == 0 {
            // Primitive parts coprime in `var`.
            return Ok(one);
        }
        let delta = deg_wrt(&a, vidx) - deg_wrt(&b, vidx);
        let rem = pseudo_rem(&a, &b, var)?;
        let divisor = g.try_mul(&h.try_pow(delta)?)?;
        let next = if rem.is_zero() { rem } else { exact_div(&rem, &divisor)? };
        a = b;
        g = lc_wrt(&a, var, vidx)?;
        h = if delta == 0 {
            h
        } else {
            exact_div(&g.try_pow(delta)?, &h.try_pow(delta - 1)?)?
        };
        b = next;
    }
}

/// Product of the distinct irreducible factors of `p`:
/// `p / gcd(p, dp/dv_1, ..., dp/dv_k)` over the variables present.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let order = MonomialOrder::Grevlex;
    if p.is_constant() {
        return Ok(Polynomial::one(p.registry()));
    }
    let mut g = p.clone();
    for idx in p.used_var_indices() {
        let d = p.derivative(p.registry().name(idx))?;
        if d.is_zero() {
            continue;
        }
        g = gcd(&g, &d)?;
        if g.is_constant() {
            break;
        }
    }
    let sf = exact_div(p, &g)?;
    sf.normalize_primitive_integer(&order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::poly_parse;

    fn p(text: &str) -> Polynomial {
        poly_parse(text).unwrap()
    }

    #[test]
    fn exact_division() {
        let a = p("vars: x,y\nx^2 - y^2");
        let b = p("vars: x,y\nx - y");
        assert_eq!(exact_div(&a, &b).unwrap(), p("vars: x,y\nx + y"));
        let c = p("vars: x,y\nx^2 + y");
        assert!(matches!(exact_div(&c, &b), Err(PolyError::DivisionNotExact(_))));
    }

    #[test]
    fn univariate_gcd() {
        let a = p("vars: x\nx^2 - 1");
        let b = p("vars: x\nx - 1");
        assert_eq!(gcd(&a, &b).unwrap(), p("vars: x\nx - 1"));
    }

    #[test]
    fn gcd_of_constructed_factors() {
        let g = p("vars: x,y\nx^2 + y^2 - 1");
        let a = g.try_mul(&p("vars: x,y\nx - 2")).unwrap();
        let b = g.try_mul(&p("vars: x,y\ny + 3")).unwrap();
        assert_eq!(gcd(&a, &b).unwrap(), g);
    }

    #[test]
    fn gcd_with_zero_and_errors() {
        let a = p("vars: x\nx^2 - 1");
        let z = Polynomial::zero(a.registry());
        assert_eq!(gcd(&a, &z).unwrap(), a);
        assert!(matches!(gcd(&z, &z), Err(PolyError::ZeroInput)));
    }

    #[test]
    fn squarefree_square() {
        let s = p("vars: x,y\nx + y");
        let sq = s.try_mul(&s).unwrap();
        assert_eq!(squarefree_part(&sq).unwrap(), s);
    }

    #[test]
    fn squarefree_factor_free_of_first_variable() {
        // x*(y+1)^2: the repeated factor does not involve x.
        let f = p("vars: x,y\nx")
            .try_mul(&p("vars: x,y\ny + 1"))
            .unwrap()
            .try_mul(&p("vars: x,y\ny + 1"))
            .unwrap();
        let sf = squarefree_part(&f).unwrap();
        let expect = p("vars: x,y\nx").try_mul(&p("vars: x,y\ny + 1")).unwrap();
        assert_eq!(sf, expect.normalize_primitive_integer(&MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn content_and_primitive_part() {
        // (y+1) * (x^2 + x) viewed in x has content y+1.
        let f = p("vars: x,y\ny + 1").try_mul(&p("vars: x,y\nx^2 + x")).unwrap();
        assert_eq!(content_wrt(&f, "x").unwrap(), p("vars: x,y\ny + 1"));
        assert_eq!(primitive_part_wrt(&f, "x").unwrap(), p("vars: x,y\nx^2 + x"));
    }
}
