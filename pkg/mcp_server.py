from mcp.server.fastmcp import FastMCP  # Import FastMCP, the quickstart server base

from octahedral.utils import setup_logging
from tools.branching import get_branching
from tools.character_table import get_character_table
from tools.decomposition import get_decomposition
from tools.dirac_relations import get_dirac_relations
from tools.group_info import get_group_info
from tools.hypercube import get_hypercube
from tools.idempotents import get_idempotents
from tools.orchestrator import analyze_irreducible
from tools.suite import get_suite

mcp = FastMCP("Octahedral Workbench")  # Initialize an MCP server instance with a descriptive name


@mcp.tool()
def get_group_info_mcp(group: str = "G") -> dict:
    return get_group_info(group)


@mcp.tool()
def get_character_table_mcp(group: str = "G", prime: int = None) -> dict:
    return get_character_table(group, prime)


@mcp.tool()
def get_decomposition_mcp(expression: str) -> dict:
    """Tool: get_decomposition
         Description:
           Decompose a representation expression into irreducibles of G, H or K.
         Parameters (object):
           • expression (string) - e.g. '2+ * 3+', 'S3(3+)', 'Res[H](4_0)', 'Ind[G](2b)'
         Required:
           [ "expression" ]"""
    return get_decomposition(expression)


@mcp.tool()
def get_branching_mcp(subgroup: str = "H") -> dict:
    return get_branching(subgroup)


@mcp.tool()
def get_idempotents_mcp(sign: int = 1) -> dict:
    return get_idempotents(sign)


@mcp.tool()
def get_dirac_relations_mcp() -> dict:
    return get_dirac_relations()


@mcp.tool()
def get_hypercube_mcp(closure_cap: int = None) -> dict:
    return get_hypercube(closure_cap)


@mcp.tool()
def analyze_irreducible_mcp(label: str, with_matrices: bool = True) -> dict:
    """Tool: analyze_irreducible
       Description:
         Character row, indicator, restrictions to H and K, tensor square split and
         verified explicit matrices for one irreducible of G.
       Parameters (object):
         label (string): one of 1+, 1-, 2_0, 3+, 3-, 2+, 2-, 4_0
         with_matrices (boolean): build the explicit representation too
       Required: [ "label" ]"""
    return analyze_irreducible(label, with_matrices)


@mcp.tool()
def get_suite_mcp(name: str) -> dict:
    return get_suite(name)


if __name__ == "__main__":
    setup_logging()
    mcp.run(transport="stdio")
