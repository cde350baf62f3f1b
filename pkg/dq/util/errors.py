''' 
Date: 2026-09-02 10:12:40
LastEditTime: 2026-10-11 21:40:03
Description: 
    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''


class DQError(Exception):
    """ Base class of every error raised by the library. """
    exit_code = 2


class ParseError(DQError):
    """
        Syntax or kind error in the text grammar, annotated with the column of the offending token.
    """
    exit_code = 1

    def __init__(self, msg, text=None, pos=None):
        super().__init__(msg)
        self.msg = msg
        self.text = text
        self.pos = pos

    def __str__(self):
        if self.text is None or self.pos is None:
            return self.msg
        # same layout as a compiler diagnostic: message, source line, caret
        return f"{self.msg} at column {self.pos + 1}:\n{self.text}\n{' ' * self.pos}^"


class UsageError(DQError, ValueError):
    """ Mismatched truncation order, dimension or arity between operands. """


class DomainError(DQError):
    """ The inputs are well formed but outside the domain of the operation. """


class NonInvertibleSeriesError(DomainError, ZeroDivisionError):
    pass


class DegreeError(DomainError):
    pass


class ExtractionError(DomainError):
    pass


class UnsupportedError(DomainError):
    pass
