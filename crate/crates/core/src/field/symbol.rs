use std::fmt;
use std::sync::{LazyLock, RwLock};

static TABLE: LazyLock<RwLock<Vec<String>>> = LazyLock::new(|| RwLock::new(vec!["q".to_owned()]));

/// An indeterminate of the coefficient field. Symbols are interned in a
/// process-wide, append-only table; `q` always has index 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

impl Symbol {
    pub const Q: Symbol = Symbol(0);

    pub fn intern(name: &str) -> Symbol {
        if let Some(i) = TABLE.read().unwrap().iter().position(|s| s == name) {
            return Symbol(i as u32);
        }
        let mut table = TABLE.write().unwrap();
        // another thread may have won the race between the two locks
        if let Some(i) = table.iter().position(|s| s == name) {
            return Symbol(i as u32);
        }
        table.push(name.to_owned());
        Symbol((table.len() - 1) as u32)
    }

    pub fn name(self) -> String {
        TABLE.read().unwrap()[self.0 as usize].clone()
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Symbol {
        Symbol(i as u32)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_is_preinterned() {
        assert_eq!(Symbol::intern("q"), Symbol::Q);
        assert_eq!(Symbol::Q.index(), 0);
    }

    #[test]
    fn interning_is_stable() {
        let a = Symbol::intern("sym_test_a");
        let b = Symbol::intern("sym_test_b");
        assert_ne!(a, b);
        assert_eq!(Symbol::intern("sym_test_a"), a);
        assert_eq!(a.name(), "sym_test_a");
    }
}
