//! Ternary Gray code as the Towers of Bucharest, and the state graph
//! reading of it: every word is one legal tower position.

use loopless_gray::harness::bucharest_degrees;
use loopless_gray::odd::{bucharest_board, bucharest_moves};
use loopless_gray::{bucharest_generator, collect_words};

fn main() -> loopless_gray::Result<()> {
    let words = collect_words(bucharest_generator(3))?;
    for w in &words {
        let board = bucharest_board(w)?;
        println!("{w}  {:<24} legal moves: {}", board.dump(), bucharest_moves(&board).len());
    }
    for n in 1..=5 {
        println!("{}", bucharest_degrees(n));
    }
    Ok(())
}
