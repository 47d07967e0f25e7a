"""Text normalization shared by query analysis, lexicons, and the corpus index.

All matching in this package happens on normalized token sequences, so the
one tokenizer below is the single source of truth for what counts as a token.
"""

import re

# Longest phrase, in tokens, that lexicons may contain and the matcher will
# look for. Bounds both the n-gram index and the query scan window.
MAX_PHRASE_TOKENS = 5

# Maximal runs of Unicode letters/digits; underscore is a separator here.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def normalize_text(text: str) -> list[str]:
    """Lowercase *text* and split it into matchable tokens.

    Tokens are maximal alphanumeric runs. Single-character tokens are
    dropped unless they contain a digit, so "vitamin C" loses the "c"
    but "type 2" keeps the "2".
    """
    tokens = []
    for tok in _TOKEN_RE.findall(text.lower()):
        if len(tok) == 1 and not tok.isdigit():
            continue
        tokens.append(tok)
    return tokens


def normalize_phrase(text: str) -> str:
    """Normalize a lexicon phrase to its canonical spaced-token form."""
    return " ".join(normalize_text(text))
