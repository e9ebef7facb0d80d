import argparse

from anytree import Node as TreeNode, RenderTree

from formulas.model import Connective, Formula, Leaf, enumerate_bracketings, render


def build_tree(f: Formula, c: Connective, style: str | None = None) -> TreeNode:
    """Mirror a bracketing as an anytree hierarchy; internal nodes are labelled with the subformula they head."""

    def build(node: Formula, parent: TreeNode | None) -> TreeNode:
        if isinstance(node, Leaf):
            return TreeNode(f"p{node.index}", parent=parent)
        tree_node = TreeNode(render(node, c, style), parent=parent)
        build(node.left, tree_node)
        build(node.right, tree_node)
        return tree_node

    return build(f, None)


def render_formula_tree(f: Formula, c: Connective, style: str | None = None) -> str:
    root = build_tree(f, c, style)
    return "\n".join(f"{pre}{node.name}" for pre, _, node in RenderTree(root))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Draw every bracketing of n variables as a tree")
    parser.add_argument("-n", type=int, default=3, help="Number of variables")
    parser.add_argument(
        "-c",
        "--connective",
        choices=[c.value for c in Connective],
        default=Connective.IMP.value,
    )
    args = parser.parse_args()

    connective = Connective(args.connective)
    for formula in enumerate_bracketings(args.n):
        print(render_formula_tree(formula, connective))
        print()
