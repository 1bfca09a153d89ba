/// Online suffix automaton over {0, 1}.
#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    next: Vec<[u32; 2]>,
    link: Vec<u32>,
    len: Vec<u32>,
    last: u32,
}

const NONE: u32 = u32::MAX;

impl Default for SuffixAutomaton {
    fn default() -> Self {
        Self::new()
    }
}

impl SuffixAutomaton {
    pub fn new() -> Self {
        SuffixAutomaton {
            next: vec![[NONE; 2]],
            link: vec![NONE],
            len: vec![0],
            last: 0,
        }
    }

    pub fn with_capacity(letters: usize) -> Self {
        let mut s = Self::new();
        s.next.reserve(2 * letters);
        s.link.reserve(2 * letters);
        s.len.reserve(2 * letters);
        s
    }

    pub fn states(&self) -> usize {
        self.len.len()
    }

    fn add_state(&mut self, len: u32, next: [u32; 2], link: u32) -> u32 {
        self.next.push(next);
        self.len.push(len);
        self.link.push(link);
        (self.len.len() - 1) as u32
    }

    /// Append a letter; returns ℓ, the length of the longest suffix of the
    /// text so far that also ends at an earlier position.
    pub fn push(&mut self, c: u8) -> usize {
        let c = c as usize;
        let cur = self.add_state(self.len[self.last as usize] + 1, [NONE; 2], NONE);
        let mut p = self.last;
        while p != NONE && self.next[p as usize][c] == NONE {
            self.next[p as usize][c] = cur;
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.next[p as usize][c];
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.add_state(self.len[p as usize] + 1, self.next[q as usize], self.link[q as usize]);
                while p != NONE && self.next[p as usize][c] == q {
                    self.next[p as usize][c] = clone;
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
        self.len[self.link[cur as usize] as usize] as usize
    }
}

/// ℓ(m) for every prefix length m = 1..=|w| (index 0 is 0).
pub fn longest_repeated_suffix(w: &[u8]) -> Vec<usize> {
    let mut sam = SuffixAutomaton::with_capacity(w.len());
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(0);
    out.extend(w.iter().map(|&c| sam.push(c)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_suffixes() {
        assert_eq!(longest_repeated_suffix(&[0, 0, 0, 0]), vec![0, 0, 1, 2, 3]);
        assert_eq!(longest_repeated_suffix(&[1, 0, 1, 1, 0, 1]), vec![0, 0, 0, 1, 1, 2, 3]);
    }
}
