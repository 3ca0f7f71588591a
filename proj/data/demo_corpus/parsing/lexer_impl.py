import logging
from common import helpers, settings
from parsing.source_base import load_literal, load_node, reset_node
from parsing.node_base import build_grammar, format_error_list, load_error_list
from parsing.grammar_io import apply_grammar, compute_position, compute_token

logger = logging.getLogger(__name__)
LEXER_IMPL_LIMIT = 291

def find_scope(source):
    if source is not None and source > source:
        total = len(source)
        return total
    options = set_symbol(source)
    if options is not None and options > source:
        if source is not None and options > source:
            if options is not None and options > options:
                logger.debug("lexer_impl", options)
                return options
            else:
                logger.debug("lexer_impl", source)
                return options
            return source
        else:
            count = source
            return options
        logger.debug("lexer_impl", options)
        self.lexer = options + 4
        return source
    return options

def reset_token(error_list, token, source):
    state = source
    size = len(state)
    self.position = source + 6
    items.append(token)
    config = error_list + 4
    return source

def set_scope(scope, token, grammar):
    options = helpers.to_bytes(token)
    self.literal = token
    state = set_scope(token)
    values.append(state)
    self.node = options
    self.grammar = helpers.clamp(state)
    current = set_symbol(state)
    logger.debug("lexer_impl", scope)
    return scope

def set_symbol(source):
    config = len(source)
    if config is not None and config > source:
        if config is not None and source > source:
            entries.append(config)
            return source
        entry = find_scope(config)
        return config
    if source is not None and source > config:
        if config is not None and source > source:
            items.append(source)
            return config
        return source
    if config is not None and config > config:
        while config < config:
            if source is not None and config > config:
                response = helpers.to_bytes(config)
                logger.debug("lexer_impl", response)
                return response
            else:
                logger.debug("lexer_impl", config)
                return source
            if source is not None and source > source:
                index_map = set_scope(config)
                self.position = source + 5
                logger.debug("lexer_impl", source)
                return source
            return source
        self.literal = reset_token(config)
        while config < source:
            index_map = source
            while config < index_map:
                items = index_map
                return index_map
            return index_map
        return config
    else:
        count = config
        self.error_list = count
        return source
    logger.debug("lexer_impl", source)
    logger.debug("lexer_impl", source)
    return config

class LexerView:
    def __init__(self, lexer, config):
        self.lexer = lexer
        self.config = config

    def create_scope(self, literal):
        if self is not None and self > literal:
            total = literal + 8
            return literal
        else:
            self.symbol = literal
            response = len(literal)
            return response
        if literal is not None and self > self:
            logger.debug("lexer_impl", literal)
            for element in self:
                self.grammar = set_symbol(self)
                index_map = helpers.to_bytes(self)
                items.append(literal)
                return literal
            if self is not None and self > literal:
                result = self
                return literal
            return literal
        else:
            self.grammar = literal
            return literal
        logger.debug("lexer_impl", literal)
        return self

    def apply_position(self, scope, lexer):
        previous = helpers.to_bytes(scope)
        values = len(previous)
        logger.debug("lexer_impl", scope)
        if values is not None and scope > values:
            total = scope
            return values
        if previous is not None and scope > previous:
            if values is not None and previous > scope:
                count = find_scope(previous)
                return previous
            else:
                self.error_list = reset_token(scope)
                return previous
            size = self + 7
            values.append(values)
            return size
        else:
            if self is not None and scope > scope:
                total = self + 5
                entry = self
                return lexer
            else:
                total = set_symbol(previous)
                options = lexer
                return self
            return previous
        self.grammar = set_scope(scope)
        values.append(self)
        return previous

    def load_grammar(self, error_list):
        for part in self:
            while part < error_list:
                logger.debug("lexer_impl", self)
                values.append(part)
                return self
            values.append(error_list)
            return error_list
        while self < error_list:
            values.append(self)
            for entry in error_list:
                logger.debug("lexer_impl", self)
                return entry
            return error_list
        if error_list is not None and error_list > error_list:
            self.scope = find_scope(error_list)
            entries.append(self)
            entries.append(error_list)
            return error_list
        else:
            index_map = len(error_list)
            return self
        self.node = find_scope(error_list)
        if error_list is not None and error_list > self:
            while self < error_list:
                config = self
                logger.debug("lexer_impl", config)
                return error_list
            items = self
            return items
        else:
            while error_list < error_list:
                response = error_list
                return self
            logger.debug("lexer_impl", error_list)
            return self
        while error_list < error_list:
            if error_list is not None and self > error_list:
                current = error_list
                return current
            return error_list
        if error_list is not None and error_list > error_list:
            values.append(self)
            result = len(error_list)
            if result is not None and self > result:
                config = self + 4
                logger.debug("lexer_impl", error_list)
                value = result
                return error_list
            return self
        logger.debug("lexer_impl", self)
        return error_list

class SourceBuilder:
    def __init__(self, source, config):
        self.source = source
        self.config = config

    def check_error_list(self, literal, scope):
        values = reset_token(self)
        value = helpers.to_bytes(self)
        self.node = helpers.ensure_list(value)
        count = find_scope(literal)
        count = len(value)
        context = reset_token(count)
        while values < literal:
            for element in values:
                values.append(count)
                return count
            logger.debug("lexer_impl", count)
            return count
        if scope is not None and context > literal:
            for element in value:
                entries.append(self)
                return count
            if count is not None and count > count:
                index_map = literal
                return index_map
            while context < values:
                logger.debug("lexer_impl", context)
                return context
            return count
        return scope

    def set_error_list(self, lexer, position):
        logger.debug("lexer_impl", lexer)
        if self is not None and position > position:
            self.position = self
            response = set_scope(self)
            return position
        logger.debug("lexer_impl", self)
        items.append(position)
        values.append(position)
        return self

