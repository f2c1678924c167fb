//! Boolean functions on up to 16 variables, stored as packed truth tables.
//!
//! Input index convention: for `x = x_1 x_2 ... x_n`,
//! `index(x) = sum_i x_i * 2^(n - i)`, so `x_1` is the most significant bit.
//! Variables are numbered from 1 in the public API.

mod bits;
mod npn;
mod transform;

use std::fmt;
use std::str::FromStr;

pub use bits::Bits;
pub use npn::{all_transforms, npn_canonical};
pub use transform::Transform;

use crate::error::{Error, Result};

/// Largest `n` a [`TruthTable`] can hold.
pub const MAX_VARS: usize = 16;
/// Largest `n` for exhaustive enumeration and canonicalization.
pub const MAX_ENUM_VARS: usize = 4;

/// A possibly partial Boolean function `f: D -> {0,1}` with `D ⊆ {0,1}^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruthTable {
    n: usize,
    values: Bits,
    domain: Bits,
}

/// Bit of the input index that holds variable `i` (1-based).
#[inline]
pub fn var_mask(n: usize, i: usize) -> usize {
    1 << (n - i)
}

/// Value of variable `i` (1-based) in input `x`.
#[inline]
pub fn input_bit(n: usize, x: usize, i: usize) -> bool {
    x & var_mask(n, i) != 0
}

/// Formats input `x` as the bit string `x_1 ... x_n`.
pub fn format_input(n: usize, x: usize) -> String {
    (1..=n)
        .map(|i| if input_bit(n, x, i) { '1' } else { '0' })
        .collect()
}

/// Parses a bit string `x_1 ... x_n` into an input index.
pub fn parse_input(n: usize, s: &str) -> Result<usize> {
    if s.len() != n {
        return Err(Error::Dimension(format!(
            "input {s:?} has {} bits, expected {n}",
            s.len()
        )));
    }
    s.chars()
        .enumerate()
        .try_fold(0usize, |acc, (pos, ch)| match ch {
            '0' => Ok(acc << 1),
            '1' => Ok((acc << 1) | 1),
            _ => Err(Error::BadChar { ch, pos }),
        })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadLength(1));
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    Ok(())
}

impl TruthTable {
    /// Total function from a predicate over input indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_n(n)?;
        let len = 1 << n;
        let mut values = Bits::zeros(len);
        for x in 0..len {
            values.set(x, f(x));
        }
        Ok(TruthTable {
            n,
            values,
            domain: Bits::ones(len),
        })
    }

    /// Partial function: `f` returns `None` outside the domain.
    pub fn from_partial_fn(n: usize, mut f: impl FnMut(usize) -> Option<bool>) -> Result<Self> {
        check_n(n)?;
        let len = 1 << n;
        let mut values = Bits::zeros(len);
        let mut domain = Bits::zeros(len);
        for x in 0..len {
            if let Some(v) = f(x) {
                domain.set(x, true);
                values.set(x, v);
            }
        }
        Ok(TruthTable { n, values, domain })
    }

    /// Total function whose value at input `x` is bit `x` of `packed` (`n <= 6`).
    pub fn from_packed(n: usize, packed: u64) -> Result<Self> {
        check_n(n)?;
        if n > 6 {
            return Err(Error::TooManyVariables { n, max: 6 });
        }
        let len = 1 << n;
        Ok(TruthTable {
            n,
            values: Bits::from_word(packed, len),
            domain: Bits::ones(len),
        })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    /// `f(x) = x_i`.
    pub fn dictator(n: usize, i: usize) -> Result<Self> {
        check_var(n, i)?;
        Self::from_fn(n, |x| input_bit(n, x, i))
    }

    /// `f(x) = x_i ⊕ x_j`.
    pub fn parity_pair(n: usize, i: usize, j: usize) -> Result<Self> {
        check_var(n, i)?;
        check_var(n, j)?;
        Self::from_fn(n, |x| input_bit(n, x, i) ^ input_bit(n, x, j))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn value(&self, x: usize) -> bool {
        self.values.get(x)
    }

    /// `Some(f(x))` when `x` is in the domain.
    #[inline]
    pub fn get(&self, x: usize) -> Option<bool> {
        self.domain.get(x).then(|| self.values.get(x))
    }

    #[inline]
    pub fn in_domain(&self, x: usize) -> bool {
        self.domain.get(x)
    }

    pub fn values(&self) -> &Bits {
        &self.values
    }

    pub fn domain(&self) -> &Bits {
        &self.domain
    }

    pub fn is_total(&self) -> bool {
        self.domain.all()
    }

    /// Packed values (`n <= 6`), bit `x` holding `f(x)`.
    pub fn packed(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.values.low_word())
    }

    pub fn domain_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.domain.iter_ones()
    }

    /// The constant value if `f` takes a single value on its domain.
    pub fn constant_value(&self) -> Option<bool> {
        let mut it = self.domain_iter().map(|x| self.values.get(x));
        let first = it.next()?;
        it.all(|v| v == first).then_some(first)
    }

    pub fn require_total(&self) -> Result<()> {
        if self.is_total() {
            Ok(())
        } else {
            Err(Error::PartialTable)
        }
    }

    /// True iff some input `x` has `f(x) != f(x^i)`, `x^i` being `x` with bit `i` flipped.
    pub fn depends_on(&self, i: usize) -> Result<bool> {
        self.require_total()?;
        check_var(self.n, i)?;
        let m = var_mask(self.n, i);
        Ok((0..self.len())
            .filter(|x| x & m == 0)
            .any(|x| self.values.get(x) != self.values.get(x | m)))
    }

    /// Sorted list of the variables `f` depends on.
    pub fn dependent_set(&self) -> Result<Vec<usize>> {
        self.require_total()?;
        (1..=self.n)
            .filter_map(|i| match self.depends_on(i) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    /// Output negation; the domain is unchanged.
    pub fn negated(&self) -> TruthTable {
        let mut values = self.values.clone();
        for x in 0..self.len() {
            values.set(x, !values.get(x));
        }
        TruthTable {
            n: self.n,
            values,
            domain: self.domain.clone(),
        }
    }
}

pub(crate) fn check_var(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::VariableOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

/// Parses the `{0,1,*}` text format; position `idx` holds `f` at input index `idx`.
pub fn parse_truth_table(text: &str) -> Result<TruthTable> {
    text.parse()
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let len = text.chars().count();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadLength(len));
        }
        let n = len.trailing_zeros() as usize;
        check_n(n)?;
        let mut values = Bits::zeros(len);
        let mut domain = Bits::zeros(len);
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '0' => domain.set(pos, true),
                '1' => {
                    domain.set(pos, true);
                    values.set(pos, true);
                }
                '*' => {}
                _ => return Err(Error::BadChar { ch, pos }),
            }
        }
        Ok(TruthTable { n, values, domain })
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len())
            .map(|x| match self.get(x) {
                None => '*',
                Some(true) => '1',
                Some(false) => '0',
            })
            .collect();
        f.write_str(&s)
    }
}

/// All `2^(2^n)` total functions on `n <= 4` variables, in increasing packed order.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = TruthTable>> {
    check_n(n)?;
    if n > MAX_ENUM_VARS {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_ENUM_VARS,
        });
    }
    let count = 1u64 << (1 << n);
    Ok((0..count).map(move |p| TruthTable::from_packed(n, p).expect("n checked")))
}
