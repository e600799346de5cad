use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{Monomial, Scalar, ScalarError, Var};

/// Parameter assignment used for substitution.
pub type Assignment = BTreeMap<Var, Scalar>;

/// Multivariate Laurent polynomial over ℚ(√d).
///
/// Terms are kept in a sorted map with no zero coefficients, so the zero
/// polynomial is the empty map and equality of values is equality of maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Scalar::from_int(n))
    }

    pub fn var(name: impl Into<Var>) -> Self {
        Self::term(Scalar::one(), Monomial::var(name))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// The constant value when no parameter occurs.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// `Some((c, m))` when the polynomial is a single nonzero term `c·m`.
    pub fn as_single_term(&self) -> Option<(&Scalar, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Parameters occurring with a negative exponent in some term.
    pub fn denominator_vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().filter(|(_, e)| *e < 0).map(|(v, _)| v.clone()))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Exact division by a single nonzero term; any other divisor is rejected.
    pub fn div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (c, m) = divisor.as_single_term().ok_or(ScalarError::NonMonomialDivisor)?;
        Ok(self.scale(&c.inv()?).mul_monomial(&m.inv()))
    }

    pub fn pow(&self, k: i32) -> Result<LaurentPoly, ScalarError> {
        if k < 0 {
            return LaurentPoly::one().div(self)?.pow(-k);
        }
        if let Some((c, m)) = self.as_single_term() {
            return Ok(LaurentPoly::term(c.pow(k)?, m.pow(k)));
        }
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Exact evaluation. Every parameter must be assigned; parameters that
    /// occur with a negative exponent must be assigned nonzero values.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Scalar, ScalarError> {
        let p = self.substitute_partial(assignment)?;
        match p.as_constant() {
            Some(c) => Ok(c),
            None => Err(ScalarError::Unassigned(
                p.variables().into_iter().next().map(|v| v.to_string()).unwrap_or_default(),
            )),
        }
    }

    /// Substitutes the assigned parameters and leaves the others symbolic.
    pub fn substitute_partial(&self, assignment: &Assignment) -> Result<LaurentPoly, ScalarError> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.factors() {
                match assignment.get(v) {
                    Some(x) => {
                        if *e < 0 && x.is_zero() {
                            return Err(ScalarError::ZeroDenominator(v.to_string()));
                        }
                        coeff = &coeff * &x.pow(*e)?;
                    }
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial::from_factors(rest), coeff);
        }
        Ok(out)
    }

    /// Viewing the polynomial in `var`, returns the coefficient of each
    /// power of `var` (powers ascending).
    pub fn collect_in(&self, var: &str) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(var);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl From<Scalar> for LaurentPoly {
    fn from(c: Scalar) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render(self))
    }
}
