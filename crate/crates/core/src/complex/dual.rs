/// Dual graph of a stacked ball: one node per top simplex, an edge for every
/// pair sharing a codimension-one face. Always a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    nodes: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl DualTree {
    pub(crate) fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); nodes];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        DualTree {
            nodes,
            edges,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Edges as `(smaller, larger)` pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.nodes == 0 || self.dfs_order(0).len() == self.nodes
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.nodes && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Preorder from `root`, visiting neighbours in ascending index.
    pub fn dfs_order(&self, root: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes);
        let mut visited = vec![false; self.nodes];
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            if visited[node] {
                continue;
            }
            visited[node] = true;
            order.push(node);
            // reversed so the smallest neighbour is popped first
            for &next in self.adjacency[node].iter().rev() {
                if !visited[next] {
                    stack.push(next);
                }
            }
        }
        order
    }

    /// Nodes along the path between two nodes, both ends included.
    pub fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.nodes];
        let mut queue = std::collections::VecDeque::from([from]);
        parent[from] = from;
        while let Some(node) = queue.pop_front() {
            if node == to {
                break;
            }
            for &next in &self.adjacency[node] {
                if parent[next] == usize::MAX {
                    parent[next] = node;
                    queue.push_back(next);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// End-to-end order when the tree is a path, starting at the smaller endpoint.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_path() {
            return None;
        }
        let start = (0..self.nodes).find(|&i| self.degree(i) <= 1)?;
        Some(self.dfs_order(start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node() {
        let t = DualTree::new(1, vec![]);
        assert!(t.is_path());
        assert_eq!(t.path_order(), Some(vec![0]));
    }

    #[test]
    fn path_from_smaller_endpoint() {
        let t = DualTree::new(4, vec![(2, 0), (0, 1), (1, 3)]);
        assert!(t.is_path());
        assert_eq!(t.path_order(), Some(vec![2, 0, 1, 3]));
        assert_eq!(t.path_between(2, 3), vec![2, 0, 1, 3]);
    }

    #[test]
    fn star_is_not_a_path() {
        let t = DualTree::new(4, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(t.is_tree());
        assert!(!t.is_path());
        assert_eq!(t.path_order(), None);
        assert_eq!(t.dfs_order(2), vec![2, 0, 1, 3]);
    }
}
