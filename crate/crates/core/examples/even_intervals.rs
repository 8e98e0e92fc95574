//! The even tower game with pegs stored as runs of consecutive disks, so
//! that finding the next disk to move takes constant time.

use loopless_gray::harness::profile;
use loopless_gray::{even_intervals_generator, GrayGenerator};

fn main() -> loopless_gray::Result<()> {
    let mut g = even_intervals_generator(4, 4)?;
    for _ in 0..12 {
        println!("{} {}", g.current(), g.pegs().dump());
        g.advance()?;
    }

    for n in [4, 8, 16, 20] {
        let s = profile(even_intervals_generator(2, n)?, Some(1 << 20))?;
        println!("n={n:<2} advances={:<8} max ops/advance={}", s.advances, s.max_ops);
    }
    Ok(())
}
