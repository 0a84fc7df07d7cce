import logging
from typing import Any, Dict

from octahedral.catalog import IRREP_IMAGES, named_table
from octahedral.chartab import fs_indicator, paper_label
from octahedral.reps import irrep_attempts
from .branching import get_branching
from .decomposition import get_decomposition

logger = logging.getLogger(__name__)

# function-calling schema
analyze_irreducible_definition = {
    "name": "analyze_irreducible",
    "description": (
        "Collect everything the workbench knows about one irreducible of G: character row, indicator, "
        "restrictions to H and K, tensor square split, and which displayed matrices realise it."
    ),
    "parameters": {
        "type": "object",
        "properties": {
            "label": {
                "type": "string",
                "description": "Irreducible of G: 1+, 1-, 2_0, 3+, 3-, 2+, 2-, 4_0."
            },
            "with_matrices": {
                "type": "boolean",
                "description": "Also build the explicit representation and report the verified image variant.",
                "default": True
            }
        },
        "required": ["label"]
    }
}


def analyze_irreducible(label: str, with_matrices: bool = True) -> Dict[str, Any]:
    """
    1) character row and Frobenius-Schur indicator from the table of G
    2) restriction to H and to K through the branching tool
    3) S2 and L2 of the tensor square through the decomposition tool
    4) optionally, the displayed generator images and the variant that verified
    """
    logger.info("Analysing irreducible %s", label)
    table = named_table("G")
    if label not in table:
        return {"error": f"No irreducible '{label}' of G; known: {', '.join(table.labels)}"}
    chi = table[label]
    result = {
        "label": label,
        "paper_label": paper_label(label),
        "degree": chi.degree,
        "values": dict(zip(table.column_names, (chi.values[c].to_pretty() for c in table.columns))),
        "indicator": fs_indicator(chi),
        "restrictions": {
            sub: get_branching(sub)["rows"][label]["text"] for sub in ("H", "K")
        },
        "square": {
            "S2": get_decomposition(f"S2({label})")["text"],
            "L2": get_decomposition(f"L2({label})")["text"],
        },
    }
    if with_matrices and label in IRREP_IMAGES:
        rep, attempts = irrep_attempts(label)
        result["matrices"] = {
            "verified_variant": rep.note if rep else None,
            "attempts": [{"variant": a.variant, "pass": a.passed, "reason": a.reason} for a in attempts],
            "unitary": rep.is_unitary() if rep else None,
        }
    return result
