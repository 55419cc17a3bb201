//! Backtracking search for acyclic colourings with conflict-directed
//! backjumping.
//!
//! Vertices are picked dynamically: among uncoloured vertices next to the
//! coloured part, one with the fewest colours left (a vertex with none or
//! one is taken at once), then the most coloured neighbours, then the
//! largest degree.
//! Assigning colour `c` to `v` is rejected when class `c` already contains a
//! path from an out-neighbour of `v` back to an in-neighbour of `v`; the
//! depths of the vertices on that path form the conflict recorded for the
//! rejection. A dead end jumps straight to the deepest conflicting depth.

use crate::bits;
use crate::digraph::Digraph;

const NONE: usize = usize::MAX;

pub(crate) struct Outcome {
    /// Zero-based colour per vertex.
    pub colours: Option<Vec<usize>>,
    pub nodes: u64,
}

struct Frame {
    v: usize,
    next: usize,
    used_before: usize,
    conflict: Vec<u64>,
}

pub(crate) struct Engine<'a> {
    d: &'a Digraph,
    n: usize,
    w: usize,
    k: usize,
    domains: Option<&'a [Vec<bool>]>,
    und: Vec<u64>,
    degree: Vec<usize>,
    class: Vec<u64>,
    colour: Vec<usize>,
    depth_of: Vec<usize>,
    coloured_nbrs: Vec<usize>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    visited: Vec<u64>,
    scratch: Vec<u64>,
    probe: Vec<u64>,
}

impl<'a> Engine<'a> {
    /// `domains[v][c]` restricts vertex `v` to the allowed zero-based colours;
    /// without domains, colour symmetry is broken instead.
    pub fn new(d: &'a Digraph, k: usize, domains: Option<&'a [Vec<bool>]>) -> Self {
        let n = d.order();
        let w = d.words();
        let mut und = vec![0u64; n * w];
        for v in 0..n {
            let row = &mut und[v * w..(v + 1) * w];
            for (i, x) in row.iter_mut().enumerate() {
                *x = d.out_row(v)[i] | d.in_row(v)[i];
            }
        }
        Self {
            d,
            n,
            w,
            k,
            domains,
            degree: (0..n).map(|v| d.degree(v)).collect(),
            und,
            class: vec![0; k * w],
            colour: vec![NONE; n],
            depth_of: vec![NONE; n],
            coloured_nbrs: vec![0; n],
            parent: vec![NONE; n],
            queue: Vec::with_capacity(n),
            visited: vec![0; w],
            scratch: vec![0; w],
            probe: vec![0; bits::words_for(n)],
        }
    }

    pub fn run(mut self) -> Outcome {
        let n = self.n;
        let dw = bits::words_for(n);
        let mut nodes = 0u64;
        if self.k == 0 {
            return Outcome { colours: (n == 0).then(Vec::new), nodes };
        }
        let mut frames: Vec<Frame> = Vec::with_capacity(n);
        let mut used = 0usize;
        'outer: loop {
            if frames.last().is_none_or(|f| self.colour[f.v] != NONE) {
                if frames.len() == n {
                    break;
                }
                let v = self.pick(used);
                frames.push(Frame { v, next: 0, used_before: used, conflict: vec![0; dw] });
            }
            let depth = frames.len() - 1;
            let (v, start, used_before) = {
                let f = &frames[depth];
                (f.v, f.next, f.used_before)
            };
            let limit = match self.domains {
                Some(_) => self.k,
                None => self.k.min(used_before + 1),
            };
            for c in start..limit {
                if let Some(dom) = self.domains {
                    if !dom[v].get(c).copied().unwrap_or(false) {
                        continue;
                    }
                }
                nodes += 1;
                if self.blocked(v, c, &mut frames[depth].conflict) {
                    continue;
                }
                frames[depth].next = c + 1;
                self.assign(v, c, depth);
                used = used_before.max(c + 1);
                continue 'outer;
            }
            // Dead end at this depth.
            let mut conflict = std::mem::take(&mut frames[depth].conflict);
            if limit < self.k {
                for j in 0..depth {
                    bits::set(&mut conflict, j);
                }
            }
            let Some(target) = last_one(&conflict) else {
                return Outcome { colours: None, nodes };
            };
            bits::clear(&mut conflict, target);
            while frames.len() > target + 1 {
                let f = frames.pop().expect("non-empty");
                if self.colour[f.v] != NONE {
                    self.unassign(f.v);
                }
            }
            let f = &mut frames[target];
            self.unassign(f.v);
            for (a, b) in f.conflict.iter_mut().zip(&conflict) {
                *a |= b;
            }
            used = f.used_before;
        }
        Outcome { colours: Some(self.colour), nodes }
    }

    /// Colours still open to `v`, counting up to `cap`.
    fn open_colours(&mut self, v: usize, used: usize, cap: usize) -> usize {
        let limit = match self.domains {
            Some(_) => self.k,
            None => self.k.min(used + 1),
        };
        let mut probe = std::mem::take(&mut self.probe);
        let mut open = 0;
        for c in 0..limit {
            if let Some(dom) = self.domains {
                if !dom[v].get(c).copied().unwrap_or(false) {
                    continue;
                }
            }
            if !self.blocked(v, c, &mut probe) {
                open += 1;
                if open >= cap {
                    break;
                }
            }
        }
        self.probe = probe;
        open
    }

    fn pick(&mut self, used: usize) -> usize {
        let mut best = NONE;
        let mut best_key = (usize::MAX, usize::MAX, usize::MAX);
        for v in 0..self.n {
            if self.colour[v] != NONE {
                continue;
            }
            let open = match self.coloured_nbrs[v] {
                0 => self.k,
                _ => self.open_colours(v, used, self.k),
            };
            if open <= 1 {
                return v;
            }
            let key = (open, usize::MAX - self.coloured_nbrs[v], usize::MAX - self.degree[v]);
            if best == NONE || key < best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize, depth: usize) {
        let w = self.w;
        self.colour[v] = c;
        self.depth_of[v] = depth;
        bits::set(&mut self.class[c * w..(c + 1) * w], v);
        for u in bits::ones(&self.und[v * w..(v + 1) * w]) {
            self.coloured_nbrs[u] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let w = self.w;
        let c = self.colour[v];
        self.colour[v] = NONE;
        self.depth_of[v] = NONE;
        bits::clear(&mut self.class[c * w..(c + 1) * w], v);
        for u in bits::ones(&self.und[v * w..(v + 1) * w]) {
            self.coloured_nbrs[u] -= 1;
        }
    }

    /// Whether colouring `v` with `c` closes a cycle; if so, adds the depths
    /// of that cycle's other vertices to `conflict`.
    fn blocked(&mut self, v: usize, c: usize, conflict: &mut [u64]) -> bool {
        let w = self.w;
        let class = &self.class[c * w..(c + 1) * w];
        let out = self.d.out_row(v);
        let inn = self.d.in_row(v);
        let mut start_any = false;
        let mut target_any = false;
        for i in 0..w {
            self.visited[i] = out[i] & class[i];
            self.scratch[i] = inn[i] & class[i];
            start_any |= self.visited[i] != 0;
            target_any |= self.scratch[i] != 0;
        }
        if !start_any || !target_any {
            return false;
        }
        self.queue.clear();
        for x in bits::ones(&self.visited) {
            self.parent[x] = NONE;
            if bits::test(&self.scratch, x) {
                bits::set(conflict, self.depth_of[x]);
                return true;
            }
            self.queue.push(x);
        }
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let row = self.d.out_row(x);
            for i in 0..w {
                let fresh = row[i] & class[i] & !self.visited[i];
                if fresh == 0 {
                    continue;
                }
                self.visited[i] |= fresh;
                let mut m = fresh;
                while m != 0 {
                    let y = i * 64 + m.trailing_zeros() as usize;
                    m &= m - 1;
                    self.parent[y] = x;
                    if bits::test(&self.scratch, y) {
                        let mut z = y;
                        while z != NONE {
                            bits::set(conflict, self.depth_of[z]);
                            z = self.parent[z];
                        }
                        return true;
                    }
                    self.queue.push(y);
                }
            }
        }
        false
    }
}

fn last_one(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}
