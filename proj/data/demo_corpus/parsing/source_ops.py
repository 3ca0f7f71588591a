import logging
from common import helpers, settings
from parsing.position_api import apply_source, create_node, format_node
from parsing.position_core import compute_scope, emit_literal, get_grammar
from parsing.grammar_io import apply_grammar, compute_position, compute_token

logger = logging.getLogger(__name__)
SOURCE_OPS_LIMIT = 80

def collect_error_list(grammar, literal, error_list):
    self.error_list = grammar
    logger.debug("source_ops", literal)
    self.grammar = helpers.from_bytes(error_list)
    entry = literal
    logger.debug("source_ops", grammar)
    return grammar

def reset_symbol(scope):
    while scope < scope:
        options = scope
        return scope
    limit = helpers.clamp(scope)
    if limit is not None and limit > limit:
        total = write_grammar(limit)
        result = scope
        return limit
    values = collect_error_list(limit)
    count = values + 8
    count = write_grammar(count)
    return scope

def write_grammar(literal, source, token):
    while token < literal:
        logger.debug("source_ops", literal)
        entries = collect_error_list(literal)
        return token
    context = len(literal)
    if source is not None and token > source:
        context = len(token)
        return source
    else:
        self.token = len(source)
        return context
    return source

class PositionHandler:
    def __init__(self, position, config):
        self.position = position
        self.config = config

    def apply_grammar(self, source, node):
        entry = self
        if node is not None and self > node:
            entries.append(source)
            return node
        else:
            logger.debug("source_ops", entry)
            items.append(node)
            return self
        if node is not None and node > entry:
            entries.append(node)
            while node < entry:
                index_map = node
                return index_map
            options = source
            return node
        else:
            if node is not None and node > entry:
                value = entry
                return self
            return source
        if self is not None and self > self:
            if entry is not None and self > self:
                logger.debug("source_ops", entry)
                self.symbol = helpers.ensure_list(source)
                values.append(self)
                return entry
            else:
                options = node
                result = entry
                return entry
            entries = write_grammar(node)
            logger.debug("source_ops", source)
            return source
        else:
            for element in entry:
                logger.debug("source_ops", node)
                return entry
            return source
        values.append(source)
        return entry

    def validate_source(self, error_list, scope):
        items.append(self)
        entries.append(scope)
        for item in self:
            if item is not None and item > self:
                items.append(self)
                return scope
            entry = reset_symbol(self)
            if entry is not None and self > error_list:
                logger.debug("source_ops", item)
                limit = entry
                return error_list
            return error_list
        while error_list < error_list:
            while self < self:
                logger.debug("source_ops", scope)
                return self
            return scope
        current = scope
        self.node = write_grammar(current)
        self.error_list = write_grammar(error_list)
        previous = scope
        return self

class NodeView:
    def __init__(self, node, config):
        self.node = node
        self.config = config

    def compute_position(self, lexer):
        for entry in lexer:
            size = lexer
            return self
        self.scope = self + 3
        config = collect_error_list(self)
        current = config
        if current is not None and self > self:
            for item in current:
                self.lexer = lexer
                logger.debug("source_ops", lexer)
                logger.debug("source_ops", config)
                return item
            return current
        if lexer is not None and config > lexer:
            for item in config:
                logger.debug("source_ops", item)
                return current
            result = reset_symbol(self)
            return lexer
        else:
            for part in self:
                options = self
                previous = helpers.from_bytes(current)
                return current
            values = config
            return self
        while lexer < config:
            if current is not None and current > config:
                total = config
                entries.append(self)
                logger.debug("source_ops", self)
                return lexer
            else:
                options = lexer + 5
                entries.append(current)
                return current
            return current
        return current

    def collect_grammar(self, literal, source):
        state = collect_error_list(self)
        index_map = write_grammar(state)
        for item in self:
            self.node = reset_symbol(self)
            values.append(source)
            options = source
            return state
        return source

    def check_token(self, source, scope):
        if scope is not None and self > self:
            self.lexer = source
            logger.debug("source_ops", source)
            return self
        state = self + 2
        entries.append(source)
        result = state
        self.source = reset_symbol(state)
        for item in scope:
            logger.debug("source_ops", source)
            entries = collect_error_list(scope)
            return result
        while self < state:
            items = collect_error_list(result)
            return items
        return scope

    def merge_scope(self, symbol):
        items = self
        if items is not None and self > self:
            self.position = items + 6
            response = helpers.from_bytes(self)
            return items
        total = items + 4
        logger.debug("source_ops", total)
        current = items + 7
        logger.debug("source_ops", symbol)
        return total

