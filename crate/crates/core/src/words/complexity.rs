use std::collections::HashSet;

use crate::error::{Error, Result};

/// Number of distinct factors of length `n` in `w`.
pub fn subword_complexity(w: &[u8], n: usize) -> Result<usize> {
    if n == 0 || n > w.len() {
        return Err(Error::Domain(format!("factor length {n} outside 1..={}", w.len())));
    }
    Ok(w.windows(n).collect::<HashSet<_>>().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::CFExpansion;
    use crate::words::characteristic_prefix;

    #[test]
    fn counts() {
        let c = characteristic_prefix(&CFExpansion::golden(), 500).unwrap();
        assert_eq!(subword_complexity(&c, 10).unwrap(), 11);
        assert_eq!(subword_complexity(&[0, 0, 0, 0], 2).unwrap(), 1);
        let p: Vec<u8> = (0..400).map(|i| (i % 2) as u8).collect();
        assert_eq!(subword_complexity(&p, 5).unwrap(), 2);
        assert!(subword_complexity(&[0, 1], 3).is_err());
    }
}
