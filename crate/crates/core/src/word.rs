//! Data values and data words.
//!
//! A data word is a finite sequence of `(letter, datum)` pairs. Letters come
//! from the finite alphabet of whatever automaton reads the word; data values
//! are drawn from the naturals, and the only thing any model in this crate
//! ever does with two data values is compare them for equality.
//!
//! The textual form is a space separated list of `letter:datum` tokens, the
//! empty string being the empty word:
//!
//! ```
//! use safa::DataWord;
//!
//! let w: DataWord = "a:1 b:42".parse().unwrap();
//! assert_eq!(w.len(), 2);
//! assert_eq!(w.to_string(), "a:1 b:42");
//! assert!("".parse::<DataWord>().unwrap().is_empty());
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An element of the infinite data domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DataValue(pub u64);

impl fmt::Display for DataValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for DataValue {
    fn from(v: u64) -> Self {
        DataValue(v)
    }
}

/// Letter of a finite alphabet.
pub type Letter = String;

/// Finite sequence of `(letter, datum)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DataWord {
    items: Vec<(Letter, DataValue)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token `{token}` at position {position}: expected `letter:datum`")]
    MalformedToken { position: usize, token: String },
    #[error("non-numeric datum in token `{token}` at position {position}")]
    BadDatum { position: usize, token: String },
    #[error("datum {0} is outside the domain of the renaming")]
    Unmapped(DataValue),
    #[error("renaming is not injective: {0} and {1} share an image")]
    NotInjective(DataValue, DataValue),
}

impl DataWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_items<L, I>(items: I) -> Self
    where
        L: Into<Letter>,
        I: IntoIterator<Item = (L, u64)>,
    {
        DataWord {
            items: items.into_iter().map(|(l, d)| (l.into(), DataValue(d))).collect(),
        }
    }

    pub fn push(&mut self, letter: impl Into<Letter>, datum: DataValue) {
        self.items.push((letter.into(), datum));
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[(Letter, DataValue)] {
        &self.items
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, DataValue)> + '_ {
        self.items.iter().map(|(l, d)| (l.as_str(), *d))
    }

    /// Projection onto the alphabet.
    pub fn letters(&self) -> impl Iterator<Item = &str> + '_ {
        self.items.iter().map(|(l, _)| l.as_str())
    }

    /// Projection onto the data domain.
    pub fn data(&self) -> impl Iterator<Item = DataValue> + '_ {
        self.items.iter().map(|(_, d)| *d)
    }

    pub fn max_datum(&self) -> Option<DataValue> {
        self.data().max()
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> DataWord {
        DataWord { items: self.items[range].to_vec() }
    }

    pub fn concat(&self, other: &DataWord) -> DataWord {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        DataWord { items }
    }

    /// Replaces every datum by its image under `pi`; letters are kept.
    pub fn rename_data(&self, pi: &HashMap<DataValue, DataValue>) -> Result<DataWord, WordError> {
        let mut seen: HashMap<DataValue, DataValue> = HashMap::new();
        let mut items = Vec::with_capacity(self.items.len());
        for (letter, d) in &self.items {
            let image = *pi.get(d).ok_or(WordError::Unmapped(*d))?;
            if let Some(prev) = seen.insert(image, *d) {
                if prev != *d {
                    return Err(WordError::NotInjective(prev, *d));
                }
            }
            items.push((letter.clone(), image));
        }
        Ok(DataWord { items })
    }

    /// Two words are equal up to an injective renaming of data values.
    pub fn same_shape(&self, other: &DataWord) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut fwd = HashMap::new();
        let mut bwd = HashMap::new();
        for ((la, da), (lb, db)) in self.items.iter().zip(&other.items) {
            if la != lb {
                return false;
            }
            if *fwd.entry(*da).or_insert(*db) != *db || *bwd.entry(*db).or_insert(*da) != *da {
                return false;
            }
        }
        true
    }
}

/// Free-function form of [`DataWord::rename_data`].
pub fn rename_data(w: &DataWord, pi: &HashMap<DataValue, DataValue>) -> Result<DataWord, WordError> {
    w.rename_data(pi)
}

/// Parses `letter:datum` tokens; blank input is the empty word.
pub fn parse_word(text: &str) -> Result<DataWord, WordError> {
    let mut items = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let (letter, datum) = token.rsplit_once(':').ok_or_else(|| WordError::MalformedToken {
            position,
            token: token.to_string(),
        })?;
        if letter.is_empty() {
            return Err(WordError::MalformedToken { position, token: token.to_string() });
        }
        let datum: u64 = datum.parse().map_err(|_| WordError::BadDatum {
            position,
            token: token.to_string(),
        })?;
        items.push((letter.to_string(), DataValue(datum)));
    }
    Ok(DataWord { items })
}

impl FromStr for DataWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl fmt::Display for DataWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, d)) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}:{d}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a DataWord {
    type Item = &'a (Letter, DataValue);
    type IntoIter = std::slice::Iter<'a, (Letter, DataValue)>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
