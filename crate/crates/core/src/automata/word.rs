use std::fmt;

/// A finite sequence of alphabet tokens. The empty word is ε.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<String>);

impl Word {
    pub fn new(symbols: Vec<String>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// One symbol per character, e.g. `Word::from_chars("1101")`.
    pub fn from_chars(text: &str) -> Self {
        Word(text.chars().map(String::from).collect())
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl From<Vec<String>> for Word {
    fn from(symbols: Vec<String>) -> Self {
        Word(symbols)
    }
}

/// Single-character tokens are printed back to back, anything else is
/// space separated. ε prints as `ε`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let compact = self.0.iter().all(|s| s.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        f.write_str(&self.0.join(sep))
    }
}
