//! Identity of two decomposition tables up to reordering rows and columns.

use std::collections::HashMap;

use dmw_chardata::BlockTable;

/// Row and column correspondences: row `i` of the first table is row
/// `rows[i]` of the second, and likewise for columns. 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

struct Interned {
    /// `cells[i][j]` is the id of entry `(i, j)`.
    cells: Vec<Vec<u32>>,
    series: Vec<u32>,
}

fn intern(t: &BlockTable, ids: &mut HashMap<String, u32>) -> Interned {
    let mut id = |s: String| {
        let next = ids.len() as u32;
        *ids.entry(s).or_insert(next)
    };
    let n = t.len();
    let cells = (0..n).map(|i| (0..n).map(|j| id(t.entry(i, j).to_string())).collect()).collect();
    let series = t.columns.iter().map(|c| id(format!("series:{}", c.series))).collect();
    Interned { cells, series }
}

fn column_signature(t: &Interned, j: usize) -> (u32, Vec<u32>) {
    let mut v: Vec<u32> = t.cells.iter().map(|r| r[j]).collect();
    v.sort_unstable();
    (t.series[j], v)
}

fn row_signature(t: &Interned, i: usize) -> Vec<u32> {
    let mut v = t.cells[i].clone();
    v.sort_unstable();
    v
}

struct Search<'a> {
    a: &'a Interned,
    b: &'a Interned,
    n: usize,
    col_sig_a: Vec<(u32, Vec<u32>)>,
    col_sig_b: Vec<(u32, Vec<u32>)>,
    cols: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Refines row classes by one more matched column pair; `None` if the
    /// class sizes stop agreeing.
    fn refine(&self, ca: &[u32], cb: &[u32], ja: usize, jb: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut ids: HashMap<(u32, u32), u32> = HashMap::new();
        let mut count: HashMap<u32, i64> = HashMap::new();
        let mut na = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let next = ids.len() as u32;
            let c = *ids.entry((ca[i], self.a.cells[i][ja])).or_insert(next);
            *count.entry(c).or_insert(0) += 1;
            na.push(c);
        }
        let mut nb = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let c = *ids.get(&(cb[i], self.b.cells[i][jb]))?;
            let k = count.get_mut(&c)?;
            *k -= 1;
            if *k < 0 {
                return None;
            }
            nb.push(c);
        }
        Some((na, nb))
    }

    fn go(&mut self, k: usize, ca: Vec<u32>, cb: Vec<u32>) -> Option<Vec<usize>> {
        if k == self.n {
            return self.match_rows(&ca, &cb);
        }
        for jb in 0..self.n {
            if self.used[jb] || self.col_sig_a[k] != self.col_sig_b[jb] {
                continue;
            }
            if let Some((na, nb)) = self.refine(&ca, &cb, k, jb) {
                self.used[jb] = true;
                self.cols.push(jb);
                if let Some(rows) = self.go(k + 1, na, nb) {
                    return Some(rows);
                }
                self.cols.pop();
                self.used[jb] = false;
            }
        }
        None
    }

    fn match_rows(&self, ca: &[u32], cb: &[u32]) -> Option<Vec<usize>> {
        let mut taken = vec![false; self.n];
        ca.iter()
            .map(|c| {
                let i = (0..self.n).find(|&i| !taken[i] && cb[i] == *c)?;
                taken[i] = true;
                Some(i)
            })
            .collect()
    }
}

/// Permutations of rows and columns carrying the first table onto the
/// second, entries and column series labels included, or `None`.
pub fn permutation_identical(t1: &BlockTable, t2: &BlockTable) -> Option<Witness> {
    let n = t1.len();
    if t2.len() != n {
        return None;
    }
    let mut ids = HashMap::new();
    let a = intern(t1, &mut ids);
    let b = intern(t2, &mut ids);
    let col_sig_a: Vec<_> = (0..n).map(|j| column_signature(&a, j)).collect();
    let col_sig_b: Vec<_> = (0..n).map(|j| column_signature(&b, j)).collect();
    let mut sorted_a = col_sig_a.clone();
    let mut sorted_b = col_sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    let mut rows_a: Vec<_> = (0..n).map(|i| row_signature(&a, i)).collect();
    let mut rows_b: Vec<_> = (0..n).map(|i| row_signature(&b, i)).collect();
    rows_a.sort();
    rows_b.sort();
    if sorted_a != sorted_b || rows_a != rows_b {
        return None;
    }
    let mut search = Search { a: &a, b: &b, n, col_sig_a, col_sig_b, cols: Vec::new(), used: vec![false; n] };
    let rows = search.go(0, vec![0; n], vec![0; n])?;
    Some(Witness { rows, cols: search.cols })
}
