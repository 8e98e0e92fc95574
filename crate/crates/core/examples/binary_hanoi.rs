//! Binary reflected Gray code from the Towers of Hanoi, with the board
//! printed after each move.

use loopless_gray::{hanoi_generator, GrayGenerator};

fn main() -> loopless_gray::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let mut g = hanoi_generator(n);
    loop {
        println!("{} {}", g.current(), g.peg_dump().unwrap_or_default());
        if g.advance()?.is_none() {
            break;
        }
    }
    Ok(())
}
