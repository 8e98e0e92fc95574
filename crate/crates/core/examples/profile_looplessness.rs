//! Worst-case work per advance as n grows: flat for the loopless
//! generators, growing for the odometer.

use loopless_gray::harness::profile;
use loopless_gray::{Algorithm, RadixVector};

fn main() -> loopless_gray::Result<()> {
    let limit = Some(500_000);
    for algo in [Algorithm::Oracle, Algorithm::Hanoi, Algorithm::EvenIntervals, Algorithm::WorkAheadBinary] {
        let maxima = [4, 8, 12, 16]
            .into_iter()
            .map(|n| Ok(profile(algo.build(&RadixVector::uniform(2, n)?)?, limit)?.max_ops))
            .collect::<loopless_gray::Result<Vec<_>>>()?;
        println!("{algo:<18} {maxima:?}");
    }
    Ok(())
}
