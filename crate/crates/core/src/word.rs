//! Radix vectors, Gray words and single-digit transitions.
//!
//! Digit positions are 1-based and position 1 is the rightmost, fastest
//! changing digit. Internally the digit vectors are stored with position 1 at
//! index 0; rendering reverses them so that `a_n` is printed first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GrayError, Result};

/// Per-position alphabet sizes `m_1..m_n`, fastest digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RadixVector {
    radixes: Vec<u32>,
}

impl RadixVector {
    /// Builds a radix vector from radixes listed fastest digit first.
    pub fn new(radixes: Vec<u32>) -> Result<Self> {
        for (i, &m) in radixes.iter().enumerate() {
            if m < 2 {
                return Err(GrayError::RadixTooSmall {
                    position: i + 1,
                    radix: m,
                });
            }
        }
        Ok(Self { radixes })
    }

    /// `n` copies of radix `m`.
    pub fn uniform(m: u32, n: usize) -> Result<Self> {
        Self::new(vec![m; n])
    }

    /// Builds a radix vector from radixes listed most significant digit
    /// first, i.e. in the order the digits are printed.
    pub fn from_msb_first(radixes: &[u32]) -> Result<Self> {
        Self::new(radixes.iter().rev().copied().collect())
    }

    /// Parses a comma separated, most-significant-first list such as `2,5,4,2`.
    pub fn parse_msb_first(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::new(Vec::new());
        }
        let msb_first = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| GrayError::Parse(format!("radix {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_msb_first(&msb_first)
    }

    pub fn len(&self) -> usize {
        self.radixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radixes.is_empty()
    }

    /// Radix of 1-based position `i`.
    pub fn radix(&self, i: usize) -> u32 {
        self.radixes[i - 1]
    }

    /// Radixes fastest digit first.
    pub fn as_slice(&self) -> &[u32] {
        &self.radixes
    }

    /// `Some(m)` when every position has the same radix `m`.
    pub fn uniform_radix(&self) -> Option<u32> {
        let first = *self.radixes.first()?;
        self.radixes.iter().all(|&m| m == first).then_some(first)
    }

    /// Total number of words `m_1 * ... * m_n`, `None` on overflow.
    pub fn word_count(&self) -> Option<u64> {
        self.radixes
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(u64::from(m)))
    }

    /// Radix vector in printing order, comma separated.
    pub fn to_msb_first_string(&self) -> String {
        self.radixes
            .iter()
            .rev()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Direction of a single digit change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }

    /// Applies the direction to `value`, `None` when it would go below zero.
    pub fn step(self, value: u32) -> Option<u32> {
        match self {
            Direction::Up => value.checked_add(1),
            Direction::Down => value.checked_sub(1),
        }
    }
}

/// One transition: digit `position` (1-based) changes by `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeltaEvent {
    pub position: usize,
    pub direction: Direction,
}

impl DeltaEvent {
    pub fn new(position: usize, direction: Direction) -> Self {
        Self {
            position,
            direction,
        }
    }
}

/// A word `(a_n, ..., a_1)` of a mixed-radix Gray code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrayWord {
    digits: Vec<u32>,
}

impl GrayWord {
    /// The all-zero word of length `n`.
    pub fn zeros(n: usize) -> Self {
        Self {
            digits: vec![0; n],
        }
    }

    /// Builds a word from digits listed fastest digit first.
    pub fn from_digits(digits: Vec<u32>) -> Self {
        Self { digits }
    }

    /// Builds a word from digits in printing order (`a_n` first).
    pub fn from_msb_first(digits: &[u32]) -> Self {
        Self {
            digits: digits.iter().rev().copied().collect(),
        }
    }

    /// Parses a rendered word such as `0012`.
    pub fn parse(text: &str) -> Result<Self> {
        let msb_first = text
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| GrayError::Parse(format!("not a decimal digit: {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_msb_first(&msb_first))
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at 1-based position `i`.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits[i - 1]
    }

    /// Digits fastest first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub(crate) fn digit_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.digits[i - 1]
    }

    /// Checks every digit against its radix.
    pub fn fits(&self, radixes: &RadixVector) -> bool {
        self.len() == radixes.len()
            && self
                .digits
                .iter()
                .zip(radixes.as_slice())
                .all(|(&a, &m)| a < m)
    }

    /// Applies `event` in place, checking the result against `radixes`.
    pub fn apply(&mut self, event: DeltaEvent, radixes: &RadixVector) -> Result<()> {
        let j = event.position;
        if j == 0 || j > self.len() || j > radixes.len() {
            return Err(GrayError::ContractViolation(format!(
                "delta position {j} outside 1..={}",
                self.len()
            )));
        }
        let m = radixes.radix(j);
        match event.direction.step(self.digit(j)) {
            Some(v) if v < m => {
                *self.digit_mut(j) = v;
                Ok(())
            }
            _ => Err(GrayError::ContractViolation(format!(
                "digit {j} = {} cannot move {:?} under radix {m}",
                self.digit(j),
                event.direction
            ))),
        }
    }

    /// Renders the word as decimal digits, `a_n` first, no separators.
    pub fn render(&self) -> Result<String> {
        self.digits
            .iter()
            .rev()
            .map(|&a| {
                char::from_digit(a, 10).ok_or(GrayError::UnsupportedFormat { radix: a + 1 })
            })
            .collect()
    }
}

/// Returns `word` with `event` applied.
pub fn apply_delta(word: &GrayWord, event: DeltaEvent, radixes: &RadixVector) -> Result<GrayWord> {
    let mut next = word.clone();
    next.apply(event, radixes)?;
    Ok(next)
}

/// Renders `word` after checking that every radix fits in one character.
pub fn render(word: &GrayWord, radixes: &RadixVector) -> Result<String> {
    if let Some(&m) = radixes.as_slice().iter().find(|&&m| m > 10) {
        return Err(GrayError::UnsupportedFormat { radix: m });
    }
    word.render()
}

impl fmt::Display for GrayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render() {
            Ok(s) => f.write_str(&s),
            Err(_) => {
                let parts: Vec<String> = self.digits.iter().rev().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}
