//! Even radix Gray code from m + 1 pegs in a cycle.

use loopless_gray::{even_generator, GrayGenerator};

fn main() -> loopless_gray::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse().unwrap_or(0));
    let m = args.next().unwrap_or(4) as u32;
    let n = args.next().unwrap_or(3);

    let mut g = even_generator(m, n)?;
    loop {
        println!("{} {}", g.current(), g.pegs().dump());
        if g.advance()?.is_none() {
            break;
        }
    }
    Ok(())
}
