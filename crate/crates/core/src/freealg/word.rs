//! Words over the two-letter alphabet {a, b}: the monomials of Q⟨a,b⟩.

use std::fmt;
use std::str::FromStr;

use super::FreeAlgError;

/// One of the two noncommuting indeterminates. Ordered a < b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub(crate) fn bit(self) -> u64 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub(crate) fn from_bit(bit: u64) -> Letter {
        if bit == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::B => "b",
        })
    }
}

/// A finite word over {a, b}; the empty word is the multiplicative unit.
///
/// Letters are packed into a `u64`, one bit per letter with the leftmost
/// letter in the highest used bit. For equal lengths the packed value
/// compares exactly like the word does lexicographically (a < b), so the
/// derived ordering on (len, bits) is graded lexicographic. Capacity is 64
/// letters, far beyond the degree 2m-2 any construction here reaches.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u64,
}

pub const MAX_WORD_LEN: usize = 64;

impl Word {
    /// The empty word (unit monomial).
    pub fn unit() -> Word {
        Word { len: 0, bits: 0 }
    }

    pub fn single(letter: Letter) -> Word {
        Word {
            len: 1,
            bits: letter.bit(),
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(
            letters.len() <= MAX_WORD_LEN,
            "word length {} exceeds capacity {MAX_WORD_LEN}",
            letters.len()
        );
        let mut bits = 0u64;
        for &l in letters {
            bits = (bits << 1) | l.bit();
        }
        Word {
            len: letters.len() as u8,
            bits,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i`, counted from the left.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index out of range");
        Letter::from_bit((self.bits >> (self.len() - 1 - i)) & 1)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    /// Number of occurrences of `a` resp. `b`; the bidegree of the monomial.
    pub fn bidegree(&self) -> (usize, usize) {
        let b = self.bits.count_ones() as usize;
        (self.len() - b, b)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len() + other.len();
        assert!(
            len <= MAX_WORD_LEN,
            "word length {len} exceeds capacity {MAX_WORD_LEN}"
        );
        Word {
            len: len as u8,
            bits: (self.bits << other.len) | other.bits,
        }
    }

    /// The rotation moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Word {
        if self.is_empty() {
            return *self;
        }
        let k = k % self.len();
        if k == 0 {
            return *self;
        }
        let tail = self.len() - k;
        let head = self.bits >> tail;
        let mask = (1u64 << tail) - 1;
        Word {
            len: self.len,
            bits: ((self.bits & mask) << k) | head,
        }
    }

    /// The word `letter^n`.
    pub fn power(letter: Letter, n: usize) -> Word {
        Word::from_letters(&vec![letter; n])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = FreeAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "1" {
            return Ok(Word::unit());
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'a' => letters.push(Letter::A),
                'b' => letters.push(Letter::B),
                _ => return Err(FreeAlgError::Parse(format!("bad letter {c:?} in word"))),
            }
        }
        if letters.len() > MAX_WORD_LEN {
            return Err(FreeAlgError::Parse("word too long".into()));
        }
        Ok(Word::from_letters(&letters))
    }
}
