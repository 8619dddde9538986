//! Truncated power series over a real-embedded number field. A series knows
//! the largest order through which its coefficients are trustworthy; exact
//! series (polynomials) carry no truncation error.

use crate::numeric::numberfield::{NfElem, NumberField};
use crate::numeric::unipoly::FieldOps;
use crate::numeric::Rational;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Series {
    pub field: Arc<NumberField>,
    /// `coeffs[k]` is the coefficient of `t^k`; length is `valid_to + 1`
    /// unless the series is exact (then it may be shorter).
    pub coeffs: Vec<NfElem>,
    pub valid_to: usize,
    pub exact: bool,
}

impl Series {
    pub fn zero(field: &Arc<NumberField>, valid_to: usize) -> Series {
        Series { field: field.clone(), coeffs: Vec::new(), valid_to, exact: false }
    }

    pub fn exact_zero(field: &Arc<NumberField>) -> Series {
        Series { field: field.clone(), coeffs: Vec::new(), valid_to: usize::MAX, exact: true }
    }

    pub fn monomial(field: &Arc<NumberField>, c: NfElem, k: usize, valid_to: usize) -> Series {
        let zero = NfElem::from_rational(field, Rational::from_integer(0.into()));
        let mut coeffs = vec![zero; k + 1];
        coeffs[k] = c;
        Series { field: field.clone(), coeffs, valid_to, exact: false }
    }

    pub fn coeff(&self, k: usize) -> NfElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| NfElem::from_rational(&self.field, Rational::from_integer(0.into())))
    }

    fn cap(&self) -> usize {
        if self.exact {
            usize::MAX
        } else {
            self.valid_to
        }
    }

    fn trim(mut self) -> Series {
        if !self.exact {
            self.coeffs.truncate(self.valid_to.saturating_add(1));
        }
        while self.coeffs.last().map_or(false, |c| c.f_is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    /// Smallest index with a nonzero coefficient among the known ones; `None`
    /// when every known coefficient vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.f_is_zero())
    }

    pub fn is_known_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn add(&self, other: &Series) -> Series {
        let valid = self.cap().min(other.cap());
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).f_add(&other.coeff(k)));
        }
        Series {
            field: self.field.clone(),
            coeffs,
            valid_to: if valid == usize::MAX { 0 } else { valid },
            exact: valid == usize::MAX,
        }
        .trim()
    }

    pub fn neg(&self) -> Series {
        Series {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.f_neg()).collect(),
            valid_to: self.valid_to,
            exact: self.exact,
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Series) -> Series {
        let valid = self.cap().min(other.cap());
        let exact = valid == usize::MAX;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Series {
                field: self.field.clone(),
                coeffs: Vec::new(),
                valid_to: if exact { 0 } else { valid },
                exact,
            };
        }
        let len = if exact {
            self.coeffs.len() + other.coeffs.len() - 1
        } else {
            (valid + 1).min(self.coeffs.len() + other.coeffs.len() - 1)
        };
        let zero = NfElem::from_rational(&self.field, Rational::from_integer(0.into()));
        let mut coeffs = vec![zero; len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.f_is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.f_is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].f_add(&a.f_mul(b));
            }
        }
        Series {
            field: self.field.clone(),
            coeffs,
            valid_to: if exact { 0 } else { valid },
            exact,
        }
        .trim()
    }

    pub fn mul_elem(&self, c: &NfElem) -> Series {
        Series {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a.f_mul(c)).collect(),
            valid_to: self.valid_to,
            exact: self.exact,
        }
        .trim()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Series {
        if self.coeffs.is_empty() {
            let mut s = self.clone();
            if !s.exact {
                s.valid_to = s.valid_to.saturating_add(k);
            }
            return s;
        }
        let zero = NfElem::from_rational(&self.field, Rational::from_integer(0.into()));
        let mut coeffs = vec![zero; k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            field: self.field.clone(),
            coeffs,
            valid_to: if self.exact { 0 } else { self.valid_to.saturating_add(k) },
            exact: self.exact,
        }
    }

    pub fn pow(&self, e: usize, one_valid: usize) -> Series {
        let mut acc = Series {
            field: self.field.clone(),
            coeffs: vec![NfElem::from_rational(&self.field, Rational::from_integer(1.into()))],
            valid_to: one_valid,
            exact: self.exact,
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a unit series (nonzero constant term) to the same validity.
    pub fn invert_unit(&self) -> Series {
        let c0 = self.coeff(0);
        assert!(!c0.f_is_zero(), "series is not a unit");
        let n = if self.exact { self.coeffs.len().max(1) * 2 } else { self.valid_to + 1 };
        let inv0 = c0.f_inv();
        let mut out: Vec<NfElem> = vec![inv0.clone()];
        for k in 1..n {
            // sum_{i=0..k} a_i b_{k-i} = 0  =>  b_k = -inv0 * sum_{i>=1} a_i b_{k-i}
            let mut acc = NfElem::from_rational(&self.field, Rational::from_integer(0.into()));
            for i in 1..=k {
                let a = self.coeff(i);
                if a.f_is_zero() {
                    continue;
                }
                acc = acc.f_add(&a.f_mul(&out[k - i]));
            }
            out.push(acc.f_neg().f_mul(&inv0));
        }
        Series {
            field: self.field.clone(),
            coeffs: out,
            valid_to: if self.exact { n - 1 } else { self.valid_to },
            exact: false,
        }
        .trim()
    }
}
