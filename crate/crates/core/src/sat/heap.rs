//! Indexed max-heap of atoms for the decision heuristic.
//!
//! Ordering: priority atoms first, then higher activity, then lower id.

#[derive(Debug, Default, Clone)]
pub(crate) struct VarHeap {
    heap: Vec<u32>,
    // position in `heap`, or NONE
    index: Vec<u32>,
}

const NONE: u32 = u32::MAX;

#[inline]
fn before(a: u32, b: u32, activity: &[f64], priority: &[bool]) -> bool {
    let (ai, bi) = (a as usize, b as usize);
    if priority[ai] != priority[bi] {
        return priority[ai];
    }
    if activity[ai] != activity[bi] {
        return activity[ai] > activity[bi];
    }
    a < b
}

impl VarHeap {
    pub fn grow(&mut self, num_atoms: usize) {
        if self.index.len() < num_atoms + 1 {
            self.index.resize(num_atoms + 1, NONE);
        }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.index[v as usize] != NONE
    }

    pub fn insert(&mut self, v: u32, activity: &[f64], priority: &[bool]) {
        if self.contains(v) {
            return;
        }
        let pos = self.heap.len();
        self.heap.push(v);
        self.index[v as usize] = pos as u32;
        self.sift_up(pos, activity, priority);
    }

    /// Restores the heap property after `v`'s key moved towards the top.
    pub fn increased(&mut self, v: u32, activity: &[f64], priority: &[bool]) {
        if let Some(pos) = self.position(v) {
            self.sift_up(pos, activity, priority);
        }
    }

    pub fn pop(&mut self, activity: &[f64], priority: &[bool]) -> Option<u32> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        self.index[top as usize] = NONE;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.index[last as usize] = 0;
            self.sift_down(0, activity, priority);
        }
        Some(top)
    }

    /// Rebuilds from scratch; used when the key order changes globally.
    pub fn rebuild(&mut self, activity: &[f64], priority: &[bool]) {
        let vars = std::mem::take(&mut self.heap);
        for &v in &vars {
            self.index[v as usize] = NONE;
        }
        for v in vars {
            self.insert(v, activity, priority);
        }
    }

    fn position(&self, v: u32) -> Option<usize> {
        match self.index[v as usize] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    fn sift_up(&mut self, mut pos: usize, activity: &[f64], priority: &[bool]) {
        let v = self.heap[pos];
        while pos > 0 {
            let parent = (pos - 1) / 2;
            let p = self.heap[parent];
            if !before(v, p, activity, priority) {
                break;
            }
            self.heap[pos] = p;
            self.index[p as usize] = pos as u32;
            pos = parent;
        }
        self.heap[pos] = v;
        self.index[v as usize] = pos as u32;
    }

    fn sift_down(&mut self, mut pos: usize, activity: &[f64], priority: &[bool]) {
        let v = self.heap[pos];
        let len = self.heap.len();
        loop {
            let left = 2 * pos + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child =
                if right < len && before(self.heap[right], self.heap[left], activity, priority) {
                    right
                } else {
                    left
                };
            let c = self.heap[child];
            if !before(c, v, activity, priority) {
                break;
            }
            self.heap[pos] = c;
            self.index[c as usize] = pos as u32;
            pos = child;
        }
        self.heap[pos] = v;
        self.index[v as usize] = pos as u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_in_key_order() {
        let activity = vec![0.0, 1.0, 5.0, 5.0, 0.5, 2.0];
        let mut priority = vec![false; 6];
        let mut heap = VarHeap::default();
        heap.grow(5);
        for v in 1..=5 {
            heap.insert(v, &activity, &priority);
        }
        let mut order = Vec::new();
        while let Some(v) = heap.pop(&activity, &priority) {
            order.push(v);
        }
        // ties on activity broken towards the lower id
        assert_eq!(order, vec![2, 3, 5, 1, 4]);

        priority[4] = true;
        for v in 1..=5 {
            heap.insert(v, &activity, &priority);
        }
        assert_eq!(heap.pop(&activity, &priority), Some(4));
    }
}
