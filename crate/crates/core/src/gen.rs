//! Test corpora from braid closures.
//!
//! A braid word on `s` strands closes to a connected diagram whenever every
//! generator `1..s` appears, which makes braids a cheap source of valid
//! connected projections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diagram::{build_diagram, Diagram, Tag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("braids need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator {generator} is out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("generator {0} does not appear, so the closure is split")]
    MissingGenerator(usize),
    #[error("length {length} is below the {needed} letters needed to use every generator")]
    TooShort { length: usize, needed: usize },
}

/// One braid generator `sigma_i` (or its inverse).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    /// 1-based: `sigma_i` crosses strand positions `i` and `i + 1`.
    pub generator: usize,
    /// Positive letters pass the lower-left strand over.
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, GenError> {
        if strands < 2 {
            return Err(GenError::TooFewStrands(strands));
        }
        let mut used = vec![false; strands];
        for l in &letters {
            if l.generator == 0 || l.generator >= strands {
                return Err(GenError::GeneratorOutOfRange { generator: l.generator, strands });
            }
            used[l.generator] = true;
        }
        if let Some(g) = (1..strands).find(|&g| !used[g]) {
            return Err(GenError::MissingGenerator(g));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses signed generator indices, e.g. `[1, -1, 1]`.
    pub fn from_signed(strands: usize, word: &[i64]) -> Result<BraidWord, GenError> {
        let letters =
            word.iter().map(|&g| Letter { generator: g.unsigned_abs() as usize, positive: g > 0 }).collect();
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// PD tuples of the closure, one per letter in word order.
    ///
    /// The braid runs upwards with strand positions left to right and the
    /// closing arcs pass to the right. Seen counterclockwise a crossing has
    /// ends bottom-left, bottom-right, top-right, top-left; the strands run
    /// bottom-left to top-right and bottom-right to top-left.
    pub fn closure_pd(&self) -> Vec<[u64; 4]> {
        const BL: usize = 0;
        const BR: usize = 1;
        const TR: usize = 2;
        const TL: usize = 3;

        let mut labels = vec![[0u64; 4]; self.letters.len()];
        let mut first: Vec<Option<(usize, usize)>> = vec![None; self.strands];
        let mut open: Vec<Option<(usize, usize)>> = vec![None; self.strands];
        let mut next_label = 1;
        let mut join = |labels: &mut Vec<[u64; 4]>, a: (usize, usize), b: (usize, usize)| {
            labels[a.0][a.1] = next_label;
            labels[b.0][b.1] = next_label;
            next_label += 1;
        };

        for (k, letter) in self.letters.iter().enumerate() {
            let left = letter.generator - 1;
            for (pos, end) in [(left, BL), (left + 1, BR)] {
                match open[pos] {
                    Some(prev) => join(&mut labels, prev, (k, end)),
                    None => first[pos] = Some((k, end)),
                }
            }
            open[left] = Some((k, TL));
            open[left + 1] = Some((k, TR));
        }
        for pos in 0..self.strands {
            if let (Some(top), Some(bottom)) = (open[pos], first[pos]) {
                join(&mut labels, top, bottom);
            }
        }

        // PD lists the under-strand first.
        self.letters
            .iter()
            .zip(labels)
            .map(|(letter, l)| if letter.positive { [l[BR], l[TR], l[TL], l[BL]] } else { l })
            .collect()
    }
}

pub fn braid_closure(word: &BraidWord) -> Diagram {
    build_diagram(&word.closure_pd(), |_| Tag::Original)
        .expect("closure of a braid using every generator is a connected planar diagram")
}

/// A seeded random word of `length` letters using every generator.
pub fn random_word(strands: usize, length: usize, seed: u64) -> Result<BraidWord, GenError> {
    if strands < 2 {
        return Err(GenError::TooFewStrands(strands));
    }
    if length < strands - 1 {
        return Err(GenError::TooShort { length, needed: strands - 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters: Vec<Letter> = (0..length)
        .map(|_| Letter { generator: rng.gen_range(1..strands), positive: rng.gen_bool(0.5) })
        .collect();

    // Overwrite surplus letters with any missing generator.
    let mut uses = vec![0usize; strands];
    for l in &letters {
        uses[l.generator] += 1;
    }
    for missing in 1..strands {
        if uses[missing] > 0 {
            continue;
        }
        let surplus: Vec<usize> = (0..length).filter(|&i| uses[letters[i].generator] > 1).collect();
        let i = surplus[rng.gen_range(0..surplus.len())];
        uses[letters[i].generator] -= 1;
        letters[i].generator = missing;
        uses[missing] = 1;
    }
    BraidWord::new(strands, letters)
}

pub fn random_diagram(strands: usize, length: usize, seed: u64) -> Result<Diagram, GenError> {
    random_word(strands, length, seed).map(|w| braid_closure(&w))
}

/// Every valid word of exactly `length` letters, in lexicographic order with
/// letters ordered `s1 < s1^-1 < s2 < s2^-1 < ...`.
pub fn enumerate_words(strands: usize, length: usize) -> impl Iterator<Item = BraidWord> {
    let alphabet = 2 * strands.saturating_sub(1);
    let total = if alphabet == 0 { 0 } else { (alphabet as u128).pow(length as u32) };
    (0..total).filter_map(move |mut index| {
        let mut digits = vec![0usize; length];
        for digit in digits.iter_mut().rev() {
            *digit = (index % alphabet as u128) as usize;
            index /= alphabet as u128;
        }
        let letters =
            digits.into_iter().map(|d| Letter { generator: d / 2 + 1, positive: d % 2 == 0 }).collect();
        BraidWord::new(strands, letters).ok()
    })
}

/// Closures of every valid word with `1..=max_length` letters.
pub fn enumerate_up_to(strands: usize, max_length: usize) -> impl Iterator<Item = Diagram> {
    (1..=max_length).flat_map(move |len| enumerate_words(strands, len).map(|w| braid_closure(&w)))
}
