//! Text families used by tests, benchmarks and the `stats` command.

use rand::Rng;

use crate::text::Text;

/// `n` copies of symbol 1.
pub fn unary(n: usize) -> Text {
    Text::from_symbols(vec![1; n.max(1)]).expect("unary text is well formed")
}

/// Prefix of length `n` of the infinite Fibonacci word over `{1, 2}`
/// (`F_1 = 1`, `F_2 = 12`, `F_i = F_{i−1} F_{i−2}`).
pub fn fibonacci(n: usize) -> Text {
    let (mut a, mut b) = (vec![1u32], vec![1u32, 2]);
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n.max(1));
    Text::from_symbols(b).expect("fibonacci word is well formed")
}

/// Prefix of length `n` of the Thue–Morse word over `{1, 2}`.
pub fn thue_morse(n: usize) -> Text {
    Text::from_symbols(
        (0..n.max(1))
            .map(|i| 1 + (i as u32).count_ones() % 2)
            .collect(),
    )
    .expect("well formed")
}

/// Uniform random text over `[1..sigma]`.
pub fn random_text(rng: &mut impl Rng, n: usize, sigma: u32) -> Text {
    Text::new(
        (0..n.max(1)).map(|_| rng.gen_range(1..=sigma)).collect(),
        sigma,
    )
    .expect("symbols in range")
}

/// A random text with repetitions: random blocks copied from earlier in the
/// text interleaved with fresh symbols.
pub fn repetitive_text(rng: &mut impl Rng, n: usize, sigma: u32) -> Text {
    let n = n.max(1);
    let mut s: Vec<u32> = Vec::with_capacity(n);
    while s.len() < n {
        if s.len() < 4 || rng.gen_bool(0.2) {
            s.push(rng.gen_range(1..=sigma));
        } else {
            let len = rng.gen_range(1..=s.len().min(64)).min(n - s.len());
            let src = rng.gen_range(0..=s.len() - len);
            s.extend_from_within(src..src + len);
        }
    }
    Text::new(s, sigma).expect("symbols in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn shapes() {
        assert_eq!(fibonacci(8).symbols(), &[1, 2, 1, 1, 2, 1, 2, 1]);
        assert_eq!(thue_morse(8).symbols(), &[1, 2, 2, 1, 2, 1, 1, 2]);
        assert_eq!(unary(3).symbols(), &[1, 1, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let t = repetitive_text(&mut rng, 500, 3);
        assert_eq!(t.len(), 500);
        assert!(random_text(&mut rng, 100, 4)
            .symbols()
            .iter()
            .all(|&c| (1..=4).contains(&c)));
    }
}
