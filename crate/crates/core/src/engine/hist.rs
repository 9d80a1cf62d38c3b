//! Per-field version histories.

use smallvec::SmallVec;

/// Values of one field over time, as `(version, value)` pairs in ascending
/// version order.
#[derive(Debug, Clone)]
pub struct Hist<T> {
    entries: SmallVec<[(u32, T); 1]>,
}

impl<T> Default for Hist<T> {
    fn default() -> Self {
        Hist { entries: SmallVec::new() }
    }
}

impl<T> Hist<T> {
    pub fn new(version: u32, value: T) -> Self {
        let mut entries = SmallVec::new();
        entries.push((version, value));
        Hist { entries }
    }

    /// Value as of `version`: the last write at or before it.
    pub fn at(&self, version: u32) -> Option<&T> {
        match self.entries.last() {
            None => None,
            Some((v, x)) if *v <= version => Some(x),
            _ => {
                let i = self.entries.partition_point(|(v, _)| *v <= version);
                (i > 0).then(|| &self.entries[i - 1].1)
            }
        }
    }

    pub fn latest(&self) -> Option<&T> {
        self.entries.last().map(|(_, x)| x)
    }

    /// Writes `value` at `version`, which must not precede the last write.
    pub fn set(&mut self, version: u32, value: T) {
        match self.entries.last_mut() {
            Some((v, x)) if *v == version => *x = value,
            Some((v, _)) => {
                debug_assert!(*v < version, "write to an old version");
                self.entries.push((version, value));
            }
            None => self.entries.push((version, value)),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_are_stable_under_later_writes() {
        let mut h = Hist::new(1, 'a');
        h.set(4, 'b');
        h.set(4, 'c');
        h.set(9, 'd');
        assert_eq!(h.at(0), None);
        assert_eq!(h.at(1), Some(&'a'));
        assert_eq!(h.at(3), Some(&'a'));
        assert_eq!(h.at(4), Some(&'c'));
        assert_eq!(h.at(8), Some(&'c'));
        assert_eq!(h.at(100), Some(&'d'));
        assert_eq!(h.len(), 3);
    }
}
