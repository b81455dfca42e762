use harmid_core::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fixed default seed ("HARM").
pub const DEFAULT_SEED: u64 = 0x4841_524D;
pub const MAX_NUM: i64 = 1000;
pub const MAX_DEN: i64 = 1000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Reproducible random rational data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSequenceSpec {
    pub len: usize,
    pub seed: u64,
    pub max_num: i64,
    pub max_den: i64,
}

impl RandomSequenceSpec {
    pub fn new(len: usize, seed: u64) -> Self {
        RandomSequenceSpec { len, seed, max_num: MAX_NUM, max_den: MAX_DEN }
    }

    pub fn rational(&self, rng: &mut impl Rng) -> Rational {
        let n = rng.gen_range(-self.max_num..=self.max_num);
        let d = rng.gen_range(1..=self.max_den);
        Rational::new(n, d).expect("nonzero denominator")
    }

    pub fn sequence(&self) -> Vec<Rational> {
        let mut r = rng(self.seed);
        (0..self.len).map(|_| self.rational(&mut r)).collect()
    }

    /// Two independent sequences from one seed.
    pub fn pair(&self) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = rng(self.seed);
        let g = (0..self.len).map(|_| self.rational(&mut r)).collect();
        let h = (0..self.len).map(|_| self.rational(&mut r)).collect();
        (g, h)
    }

    /// `len × len` matrix, row-major.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let mut r = rng(self.seed);
        (0..self.len).map(|_| (0..self.len).map(|_| self.rational(&mut r)).collect()).collect()
    }
}
