use std::fmt;
use std::sync::Arc;

/// Name of a free parameter. Any identifier is accepted.
pub type Var = Arc<str>;

/// A Laurent monomial: a product of parameters raised to nonzero integer
/// powers. Factors are kept sorted by name and never carry exponent 0, so
/// the empty monomial is 1 and structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: impl Into<Var>) -> Self {
        Monomial(vec![(name.into(), 1)])
    }

    /// Builds a monomial from arbitrary factors, merging repeats and
    /// dropping zero exponents.
    pub fn from_factors<I, V>(factors: I) -> Self
    where
        I: IntoIterator<Item = (V, i32)>,
        V: Into<Var>,
    {
        let mut out = Monomial::one();
        for (v, e) in factors {
            out = out.mul(&Monomial(vec![(v.into(), e)]).normalized());
        }
        out
    }

    fn normalized(mut self) -> Self {
        self.0.retain(|(_, e)| *e != 0);
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, var: &str) -> i32 {
        self.0
            .iter()
            .find(|(v, _)| &**v == var)
            .map_or(0, |(_, e)| *e)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|(_, e)| *e < 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Removes `var` from the monomial, returning its exponent and the rest.
    pub fn split_off(&self, var: &str) -> (i32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (v, e) in &self.0 {
            if &**v == var {
                exp = *e;
            } else {
                rest.push((v.clone(), *e));
            }
        }
        (exp, Monomial(rest))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(v)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_cancel() {
        let a = Monomial::from_factors([("a23", 1), ("a13", -1)]);
        let b = Monomial::from_factors([("a13", 1)]);
        assert_eq!(a.mul(&b), Monomial::var("a23"));
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn ordering_is_by_name_then_exponent() {
        let a = Monomial::var("a11");
        let b = Monomial::var("a12");
        let a2 = Monomial::from_factors([("a11", 2)]);
        assert!(Monomial::one() < a);
        assert!(a < a2);
        assert!(a2 < b);
        assert_eq!(Monomial::from_factors([("b", 1), ("a", -2)]).to_string(), "a^-2*b");
    }
}
