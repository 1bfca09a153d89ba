use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable finite word over {0,1}; letters are stored as the bytes 0 and 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteWord(Vec<u8>);

impl FiniteWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&b| b > 1) {
            return Err(Error::Domain("letters must be 0 or 1".into()));
        }
        Ok(FiniteWord(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&b| b <= 1));
        FiniteWord(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn to_ascii(&self) -> String {
        ascii(&self.0)
    }
}

/// Render 0/1 bytes as a '0'/'1' string.
pub fn ascii(w: &[u8]) -> String {
    w.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

impl Deref for FiniteWord {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteWord({})", self.to_ascii())
    }
}

impl FromStr for FiniteWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("unexpected letter {c:?} in word"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(FiniteWord)
    }
}

impl serde::Serialize for FiniteWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_ascii())
    }
}
