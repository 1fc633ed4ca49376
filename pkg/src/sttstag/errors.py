"""Exception types shared across the toolkit."""


class SttsTagError(Exception):
    """Base class for all toolkit errors."""


class ParseError(SttsTagError, ValueError):
    def __init__(self, lineno, message, source=None):
        self.lineno = lineno
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}line {lineno}: {message}")


class TagsetError(SttsTagError, ValueError):
    """A tag is not a member of the active tagset."""

    def __init__(self, tag, context=""):
        self.tag = tag
        msg = f"tag {tag!r} is not in the tagset"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class AlignmentError(SttsTagError, ValueError):
    def __init__(self, sentence, token, message):
        self.sentence = sentence
        self.token = token
        super().__init__(f"sentence {sentence}, token {token}: {message}")


class MappingError(SttsTagError, ValueError):
    """A native analyzer category has no entry in the mapping table."""

    def __init__(self, category):
        self.category = category
        super().__init__(f"unmapped analyzer category {category!r}")


class AnalyzerError(SttsTagError, OSError):
    pass


class ModelError(SttsTagError, ValueError):
    pass
