//! Ordered generator words.
//!
//! A derivative `∂^α = Y₁ … Y_{|α|}` is an ordered word over a group-specific
//! generator alphabet; multi-indices alone do not determine it because the
//! letters do not commute.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Which group a word (or letter) belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Su2,
    Heis,
}

/// Generator letters. `P`/`M` are the SU(2) ladder symbols, `R1`/`R2` the
/// skew-Hermitian horizontal fields; `X`, `Y`, `Z`, `Zb` live on H₁.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    P,
    M,
    R1,
    R2,
    X,
    Y,
    Z,
    Zb,
}

impl Letter {
    pub fn group(self) -> Group {
        match self {
            Letter::P | Letter::M | Letter::R1 | Letter::R2 => Group::Su2,
            Letter::X | Letter::Y | Letter::Z | Letter::Zb => Group::Heis,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Letter::P => "P",
            Letter::M => "M",
            Letter::R1 => "R1",
            Letter::R2 => "R2",
            Letter::X => "X",
            Letter::Y => "Y",
            Letter::Z => "Z",
            Letter::Zb => "Zb",
        }
    }
}

/// An ordered word over one group's alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    group: Group,
    letters: Vec<Letter>,
}

impl GeneratorWord {
    /// Builds a word, checking every letter against the declared alphabet.
    pub fn new(group: Group, letters: Vec<Letter>) -> Result<Self> {
        if letters.iter().any(|c| c.group() != group) {
            return Err(Error::WrongGroup(group));
        }
        Ok(GeneratorWord { group, letters })
    }

    pub fn empty(group: Group) -> Self {
        GeneratorWord { group, letters: Vec::new() }
    }

    /// Parses the compact token form, e.g. `"PMPM"`, `"R1R2"`, `"ZZbZ"`.
    pub fn parse(group: Group, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let letter = match chars[i] {
                'P' => Letter::P,
                'M' => Letter::M,
                'R' => {
                    i += 1;
                    match chars.get(i) {
                        Some('1') => Letter::R1,
                        Some('2') => Letter::R2,
                        _ => return Err(Error::InvalidParam(format!("bad word token in {text:?}"))),
                    }
                }
                'X' => Letter::X,
                'Y' => Letter::Y,
                'Z' => {
                    if chars.get(i + 1) == Some(&'b') {
                        i += 1;
                        Letter::Zb
                    } else {
                        Letter::Z
                    }
                }
                c => return Err(Error::InvalidParam(format!("bad word letter {c:?} in {text:?}"))),
            };
            letters.push(letter);
            i += 1;
        }
        GeneratorWord::new(group, letters)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{}", c.token())?;
        }
        Ok(())
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            group: Group,
            letters: &'a str,
        }
        let s = self.to_string();
        Repr { group: self.group, letters: &s }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeneratorWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            group: Group,
            letters: String,
        }
        let r = Repr::deserialize(deserializer)?;
        GeneratorWord::parse(r.group, &r.letters).map_err(D::Error::custom)
    }
}

/// All words of lengths `1 … max_len` over `alphabet`, ordered by length and
/// then lexicographically in the order the alphabet lists its letters.
/// The count is `Σ_{j=1..max_len} |alphabet|^j`.
pub fn enumerate_words(alphabet: &[Letter], max_len: usize) -> Result<Vec<GeneratorWord>> {
    if alphabet.is_empty() || max_len == 0 {
        return Err(Error::InvalidAlphabet);
    }
    let group = alphabet[0].group();
    if alphabet.iter().any(|c| c.group() != group) {
        return Err(Error::InvalidAlphabet);
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(current.len() * alphabet.len());
        for stem in &current {
            for &c in alphabet {
                let mut w = stem.clone();
                w.push(c);
                next.push(w);
            }
        }
        for w in &next {
            out.push(GeneratorWord { group, letters: w.clone() });
        }
        current = next;
    }
    Ok(out)
}
