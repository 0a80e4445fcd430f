use super::LRTableau;
use crate::shapes::LRTriple;

/// All LR tableaux of shape `F^t − D^t` and content `E^t`, in lexicographic
/// order of their row-reading words. Empty when `D^t ⊄ F^t`.
///
/// Cells are filled in row-major order with values tried in increasing
/// order, so the output order falls out of the search. Every placement is
/// checked against LR1 (left and upper neighbours), the remaining content,
/// and LR2 for the current row, which is exact once the earlier rows are
/// complete.
pub fn enumerate_lr(triple: &LRTriple) -> Vec<LRTableau> {
    let Some(shape) = triple.skew_shape() else {
        return Vec::new();
    };
    let content = triple.et();
    let nvals = content.depth();
    let rows = shape.rows();
    let mut search = Search {
        spans: (1..=rows).map(|a| shape.row_span(a)).collect(),
        inner: (1..=rows).map(|a| shape.inner().part(a)).collect(),
        remaining: content.parts().to_vec(),
        before: vec![0; nvals + 1],
        upto: vec![0; nvals + 1],
        rows: vec![Vec::new(); rows],
        out: Vec::new(),
    };
    search.row(0);
    search
        .out
        .into_iter()
        .map(|r| LRTableau::new(shape.clone(), r).expect("search builds full fillings"))
        .collect()
}

struct Search {
    spans: Vec<(usize, usize)>,
    inner: Vec<usize>,
    remaining: Vec<usize>,
    // counts of each value (1-based index) in rows before / up to the current one
    before: Vec<usize>,
    upto: Vec<usize>,
    rows: Vec<Vec<usize>>,
    out: Vec<Vec<Vec<usize>>>,
}

impl Search {
    fn row(&mut self, a: usize) {
        if a == self.rows.len() {
            if self.remaining.iter().all(|&r| r == 0) {
                self.out.push(self.rows.clone());
            }
            return;
        }
        self.cell(a, self.spans[a].0);
    }

    fn cell(&mut self, a: usize, col: usize) {
        let (_, last) = self.spans[a];
        if col > last {
            let saved_upto = self.upto.clone();
            let saved_before = std::mem::replace(&mut self.before, self.upto.clone());
            self.row(a + 1);
            self.before = saved_before;
            self.upto = saved_upto;
            return;
        }
        let left = self.rows[a].last().copied().unwrap_or(1);
        let above = if a > 0 && col > self.inner[a - 1] && col <= self.spans[a - 1].1 {
            let k = col - self.inner[a - 1] - 1;
            Some(self.rows[a - 1][k])
        } else {
            None
        };
        let lo = left.max(above.map_or(1, |v| v + 1));
        for v in lo..=self.remaining.len() {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            if v >= 2 && self.upto[v] + 1 > self.before[v - 1] {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.upto[v] += 1;
            self.rows[a].push(v);
            self.cell(a, col + 1);
            self.rows[a].pop();
            self.upto[v] -= 1;
            self.remaining[v - 1] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::fixtures::*;

    #[test]
    fn running_example_has_the_four_drawn_tableaux() {
        let all = enumerate_lr(&running());
        let mut want = vec![t0(), t1(), t2(), t3()];
        want.sort_by_key(|t| t.reading_word());
        assert_eq!(all, want);
    }

    #[test]
    fn single_cell() {
        let triple = LRTriple::minimal(p("1"), p("1"), p("2")).unwrap();
        let all = enumerate_lr(&triple);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].cells(), vec![(2, 1, 1)]);
    }

    #[test]
    fn uncontained_gives_nothing() {
        let triple = LRTriple::minimal(p("3"), p("1"), p("2,2")).unwrap();
        assert!(enumerate_lr(&triple).is_empty());
    }
}
