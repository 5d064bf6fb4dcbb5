"""String utilities."""

from typing import Sequence


def pretty_num_states(num_states: int) -> str:
    """Converts a number of explored states in a human readable form.

    Example: 1500000 -> "1.5M states".
    """

    if num_states > 5e8:
        return f"{(num_states / 1e9):.1f}G states"
    elif num_states > 5e5:
        return f"{(num_states / 1e6):.1f}M states"
    elif num_states > 5e2:
        return f"{(num_states / 1e3):.1f}k states"
    else:
        return f"{num_states} states"


def elide(items: Sequence[str], max_items: int, sep: str = " ") -> str:
    """Joins items, replacing the middle ones with "..." if there are more
    than `max_items`."""

    if len(items) <= max_items:
        return sep.join(items)
    head = max_items // 2
    tail = max_items - head
    return sep.join(
        list(items[:head]) + [f"...({len(items) - max_items} more)..."]
        + list(items[len(items) - tail :])
    )
