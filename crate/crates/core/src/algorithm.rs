//! Algorithm selection by name, with radix compatibility checks.

use std::fmt;
use std::str::FromStr;

use crate::error::{GrayError, Result};
use crate::even::{even_generator, even_intervals_generator, hanoi_generator};
use crate::generator::GrayGenerator;
use crate::odd::{bucharest_generator, odd_compressed_generator, odd_generator};
use crate::oracle::reflected_sequence;
use crate::word::RadixVector;
use crate::workahead::{work_ahead_binary_generator, work_ahead_generator, work_ahead_prime_generator};

/// A boxed generator that can be moved to another thread.
pub type BoxedGenerator = Box<dyn GrayGenerator + Send>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Oracle,
    Odd,
    Bucharest,
    OddCompressed,
    Even,
    Hanoi,
    EvenIntervals,
    WorkAhead,
    WorkAheadBinary,
    WorkAheadX,
}

impl Algorithm {
    pub const ALL: [Algorithm; 10] = [
        Algorithm::Oracle,
        Algorithm::Odd,
        Algorithm::Bucharest,
        Algorithm::OddCompressed,
        Algorithm::Even,
        Algorithm::Hanoi,
        Algorithm::EvenIntervals,
        Algorithm::WorkAhead,
        Algorithm::WorkAheadBinary,
        Algorithm::WorkAheadX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Odd => "odd",
            Algorithm::Bucharest => "bucharest",
            Algorithm::OddCompressed => "odd-compressed",
            Algorithm::Even => "even",
            Algorithm::Hanoi => "hanoi",
            Algorithm::EvenIntervals => "even-intervals",
            Algorithm::WorkAhead => "work-ahead",
            Algorithm::WorkAheadBinary => "work-ahead-binary",
            Algorithm::WorkAheadX => "work-ahead-x",
        }
    }

    /// Whether the algorithm plays a tower game.
    pub fn is_tower(self) -> bool {
        matches!(
            self,
            Algorithm::Odd
                | Algorithm::Bucharest
                | Algorithm::OddCompressed
                | Algorithm::Even
                | Algorithm::Hanoi
                | Algorithm::EvenIntervals
        )
    }

    /// Constructs the generator, rejecting radix vectors it cannot handle.
    ///
    /// The work-ahead family needs at least one digit; for the empty word
    /// the oracle is used instead, which yields the single empty word.
    pub fn build(self, radixes: &RadixVector) -> Result<BoxedGenerator> {
        let n = radixes.len();
        let uniform = |algorithm: &'static str| -> Result<u32> {
            match radixes.uniform_radix() {
                Some(m) => Ok(m),
                None if n == 0 => Ok(0),
                None => Err(GrayError::UniformRadixRequired { algorithm }),
            }
        };
        let fixed = |algorithm: &'static str, radix: u32| -> Result<()> {
            if radixes.as_slice().iter().all(|&m| m == radix) {
                Ok(())
            } else {
                Err(GrayError::FixedRadixRequired { algorithm, radix })
            }
        };
        if n == 0 && matches!(self, Algorithm::WorkAhead | Algorithm::WorkAheadBinary | Algorithm::WorkAheadX) {
            return Ok(Box::new(reflected_sequence(radixes.clone())));
        }
        Ok(match self {
            Algorithm::Oracle => Box::new(reflected_sequence(radixes.clone())),
            Algorithm::Odd => {
                let m = uniform("odd")?;
                Box::new(odd_generator(if n == 0 { 3 } else { m }, n)?)
            }
            Algorithm::Bucharest => {
                fixed("bucharest", 3)?;
                Box::new(bucharest_generator(n))
            }
            Algorithm::OddCompressed => Box::new(odd_compressed_generator(radixes.clone())?),
            Algorithm::Even => {
                let m = uniform("even")?;
                Box::new(even_generator(if n == 0 { 2 } else { m }, n)?)
            }
            Algorithm::Hanoi => {
                fixed("hanoi", 2)?;
                Box::new(hanoi_generator(n))
            }
            Algorithm::EvenIntervals => {
                let m = uniform("even-intervals")?;
                Box::new(even_intervals_generator(if n == 0 { 2 } else { m }, n)?)
            }
            Algorithm::WorkAhead => Box::new(work_ahead_generator(radixes.clone())?),
            Algorithm::WorkAheadBinary => {
                fixed("work-ahead-binary", 2)?;
                Box::new(work_ahead_binary_generator(n)?)
            }
            Algorithm::WorkAheadX => Box::new(work_ahead_prime_generator(radixes.clone())?),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = GrayError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .or(match s {
                "work-ahead-prime" => Some(Algorithm::WorkAheadX),
                _ => None,
            })
            .ok_or_else(|| GrayError::Parse(format!("unknown algorithm {s:?}")))
    }
}
