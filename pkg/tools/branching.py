import logging

from octahedral.catalog import named_table
from octahedral.expr import eval_expression

logger = logging.getLogger(__name__)

get_branching_definition = {
    "name": "get_branching",
    "description": "Restriction multiplicities of every irreducible of G to the subgroup H = <j, d> or K = <w, d>.",
    "parameters": {
        "type": "object",
        "properties": {
            "subgroup": {
                "type": "string",
                "description": "'H' or 'K'.",
                "default": "H"
            }
        },
        "required": []
    }
}


def get_branching(subgroup: str = "H") -> dict:
    logger.info("Computing branching from G to %s", subgroup)
    if subgroup not in ("H", "K"):
        raise ValueError("subgroup must be H or K")
    small = named_table(subgroup)
    rows = {}
    for chi in named_table("G"):
        d = eval_expression(f"Res[{subgroup}]({chi.label})")
        rows[chi.label] = {"multiplicities": [d[s] for s in small.labels], "text": d.render()}
    return {"group": "G", "subgroup": subgroup, "columns": list(small.labels), "rows": rows}
