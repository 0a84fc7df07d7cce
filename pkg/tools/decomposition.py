import logging

from octahedral.expr import ambient_of, eval_expression, parse_expression, render_expression

logger = logging.getLogger(__name__)

get_decomposition_definition = {
    "name": "get_decomposition",
    "description": (
        "Decompose a representation expression into irreducibles, e.g. '2+ * 3+', 'S3(3+)', "
        "'L2(3+ + 4_0)', 'Res[H](4_0)', 'Ind[G](2b)'."
    ),
    "parameters": {
        "type": "object",
        "properties": {
            "expression": {
                "type": "string",
                "description": "Expression over irreducible names with + (sum), * (tensor) and functors S2, L2, S3, L3, M3, Dual, Res[H], Res[K], Ind[G]."
            }
        },
        "required": ["expression"]
    }
}


def get_decomposition(expression: str) -> dict:
    logger.info("Decomposing %s", expression)
    if not expression:
        raise ValueError("expression is required")
    e = parse_expression(expression)
    result = eval_expression(e)
    return {
        "expression": render_expression(e),
        "group": ambient_of(e),
        "terms": result.as_dict(),
        "text": result.render(),
        "paper": result.render("paper"),
    }
