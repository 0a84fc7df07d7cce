import logging

from octahedral.catalog import named_table
from octahedral.chartab import fs_indicator, real_wedderburn, table_json, table_markdown

logger = logging.getLogger(__name__)

get_character_table_definition = {
    "name": "get_character_table",
    "description": "Exact character table (Dixon's method) of a workbench group with display labels and indicators.",
    "parameters": {
        "type": "object",
        "properties": {
            "group": {
                "type": "string",
                "description": "Group name, e.g. 'G', 'H', 'K', 'Sym4'.",
                "default": "G"
            },
            "prime": {
                "type": "integer",
                "description": "Prime p = 1 mod exponent for Dixon's method; the configured prime when omitted."
            }
        },
        "required": []
    }
}


def get_character_table(group: str = "G", prime: int = None) -> dict:
    """
    Returns the table as JSON plus its Markdown rendering.

    - values are exact field elements, serialised as 8 comma-separated rationals
    - every irreducible carries its Frobenius-Schur indicator
    """
    logger.info("Computing character table for %s", group)
    if not group:
        raise ValueError("group is required")
    table = named_table(group, prime=prime)
    result = table_json(table)
    for entry, chi in zip(result["irreps"], table):
        entry["indicator"] = fs_indicator(chi)
    result["real_algebra"] = real_wedderburn(table.group, table).render("ascii")
    result["markdown"] = table_markdown(table)
    return result
