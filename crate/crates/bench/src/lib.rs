//! Benchmark inputs.

use attract::{families, Text};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub enum Family {
    Unary,
    Fibonacci,
    Repetitive,
    Random,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Unary,
        Family::Fibonacci,
        Family::Repetitive,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Unary => "unary",
            Family::Fibonacci => "fibonacci",
            Family::Repetitive => "repetitive",
            Family::Random => "random",
        }
    }

    /// Deterministic text of length `n`.
    pub fn text(self, n: usize) -> Text {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        match self {
            Family::Unary => families::unary(n),
            Family::Fibonacci => families::fibonacci(n),
            Family::Repetitive => families::repetitive_text(&mut rng, n, 4),
            Family::Random => families::random_text(&mut rng, n, 4),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for f in Family::ALL {
            assert_eq!(f.text(300), f.text(300));
            assert_eq!(f.text(300).len(), 300);
        }
    }
}
