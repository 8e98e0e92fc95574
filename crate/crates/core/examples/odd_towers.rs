//! Odd radix Gray code from m pegs in a row.

use loopless_gray::{odd_generator, GrayGenerator};

fn main() -> loopless_gray::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse().unwrap_or(0));
    let m = args.next().unwrap_or(5) as u32;
    let n = args.next().unwrap_or(3);

    let mut g = odd_generator(m, n)?;
    let mut count = 1;
    println!("{} {}", g.current(), g.pegs().dump());
    while let Some(delta) = g.advance()? {
        count += 1;
        println!("{} {}  (digit {} {:?})", g.current(), g.pegs().dump(), delta.position, delta.direction);
    }
    println!("{count} words");
    Ok(())
}
