use super::EnumError;

/// Ordered rooted tree. Vertices are numbered in preorder, the root is 0,
/// and children keep their left-to-right order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    /// Builds the tree of a Dyck word (`true` = step down to a new child).
    pub fn from_dyck(word: &[bool]) -> Self {
        let mut parent = vec![None];
        let mut children = vec![Vec::new()];
        let mut cur = 0;
        for &down in word {
            if down {
                let v = parent.len();
                parent.push(Some(cur));
                children.push(Vec::new());
                children[cur].push(v);
                cur = v;
            } else {
                cur = parent[cur].expect("unbalanced Dyck word");
            }
        }
        Self { parent, children }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Tree edges `(parent, child)`, ordered by child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.vertex_count())
            .map(|c| (self.parent[c].unwrap(), c))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|v| self.children[v].len() + usize::from(self.parent[v].is_some()))
            .collect()
    }
}

/// Every plane tree on `n` vertices, each once, in decreasing lexicographic
/// order of Dyck words (down-step before up-step).
pub fn enumerate_plane_trees(n: usize) -> Result<PlaneTrees, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroVertices);
    }
    let m = n - 1;
    let mut word = vec![true; m];
    word.extend(std::iter::repeat_n(false, m));
    Ok(PlaneTrees {
        word,
        pairs: m,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct PlaneTrees {
    word: Vec<bool>,
    pairs: usize,
    done: bool,
}

impl PlaneTrees {
    fn advance(&mut self) {
        // Rightmost down-step that can become an up-step, then the largest
        // completion: all remaining down-steps first.
        let mut opens = 0;
        let mut closes = 0;
        let mut target = None;
        for (i, &down) in self.word.iter().enumerate() {
            if down && opens > closes {
                target = Some((i, opens));
            }
            if down {
                opens += 1;
            } else {
                closes += 1;
            }
        }
        let Some((i, opens_before)) = target else {
            self.done = true;
            return;
        };
        self.word[i] = false;
        let remaining_opens = self.pairs - opens_before;
        for (k, slot) in self.word[i + 1..].iter_mut().enumerate() {
            *slot = k < remaining_opens;
        }
    }
}

impl Iterator for PlaneTrees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        if self.done {
            return None;
        }
        let tree = PlaneTree::from_dyck(&self.word);
        self.advance();
        Some(tree)
    }
}
