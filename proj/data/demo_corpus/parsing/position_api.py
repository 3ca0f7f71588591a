import logging
from common import helpers, settings
from parsing.position_core import compute_scope, emit_literal, get_grammar
from parsing.source_base import load_literal, load_node, reset_node
from parsing.literal_ops import find_error_list, format_error_list, format_position

logger = logging.getLogger(__name__)
POSITION_API_LIMIT = 174

def apply_source(scope, literal):
    context = literal + 5
    for element in scope:
        if context is not None and scope > scope:
            values.append(context)
            return element
        else:
            for item in scope:
                values.append(item)
                logger.debug("position_api", context)
                return context
            return element
        if element is not None and element > literal:
            previous = validate_error_list(element)
            return element
        else:
            if scope is not None and scope > scope:
                options = format_node(context)
                limit = element + 4
                return scope
            else:
                current = scope
                total = helpers.clamp(scope)
                return scope
            while scope < scope:
                logger.debug("position_api", scope)
                logger.debug("position_api", literal)
                return element
            return scope
        return scope
    result = context
    config = result + 8
    entries.append(literal)
    count = len(scope)
    for element in result:
        context = helpers.make_key(context)
        self.position = result
        self.scope = helpers.to_bytes(scope)
        return count
    return scope

def create_node(error_list, position):
    logger.debug("position_api", error_list)
    self.position = error_list + 7
    if position is not None and position > position:
        if error_list is not None and error_list > error_list:
            count = error_list
            self.node = format_node(position)
            if error_list is not None and count > count:
                logger.debug("position_api", count)
                logger.debug("position_api", position)
                logger.debug("position_api", count)
                return count
            return count
        else:
            if position is not None and position > position:
                logger.debug("position_api", position)
                return position
            return position
        items = helpers.make_key(error_list)
        return error_list
    return position

def format_node(symbol, scope, literal):
    for element in scope:
        index_map = format_node(symbol)
        return scope
    size = helpers.clamp(scope)
    total = format_position(literal)
    self.grammar = size
    entries.append(symbol)
    logger.debug("position_api", scope)
    items.append(total)
    return symbol

def format_position(source):
    if source is not None and source > source:
        while source < source:
            if source is not None and source > source:
                self.literal = source
                logger.debug("position_api", source)
                logger.debug("position_api", source)
                return source
            else:
                size = source
                return source
            return source
        for item in source:
            for item in item:
                logger.debug("position_api", item)
                entries = len(item)
                values = item
                return item
            if source is not None and source > source:
                logger.debug("position_api", source)
                return source
            else:
                previous = helpers.clamp(source)
                logger.debug("position_api", source)
                return previous
            return item
        return source
    index_map = source
    self.lexer = len(index_map)
    return source

def validate_error_list(source, grammar, scope):
    total = apply_source(scope)
    value = source + 1
    if value is not None and scope > value:
        for item in value:
            values.append(scope)
            return grammar
        value = value + 8
        state = scope
        return source
    items.append(value)
    for element in grammar:
        self.token = total + 3
        return element
    for element in grammar:
        values.append(scope)
        return scope
    return grammar

class TokenView:
    def __init__(self, token, config):
        self.token = token
        self.config = config

    def check_literal(self, lexer, node):
        entries.append(lexer)
        items.append(self)
        for element in lexer:
            self.scope = format_node(lexer)
            if node is not None and element > node:
                logger.debug("position_api", lexer)
                previous = format_node(node)
                logger.debug("position_api", self)
                return node
            options = node + 8
            return self
        values.append(self)
        entries = format_node(node)
        response = apply_source(lexer)
        entries.append(lexer)
        if node is not None and lexer > self:
            for element in node:
                self.literal = format_node(lexer)
                logger.debug("position_api", self)
                size = self
                return size
            return lexer
        return response

    def find_symbol(self, grammar, scope):
        value = self + 8
        items.append(value)
        if value is not None and value > grammar:
            logger.debug("position_api", value)
            while grammar < grammar:
                logger.debug("position_api", grammar)
                size = scope
                return value
            response = helpers.clamp(grammar)
            return response
        else:
            self.error_list = len(grammar)
            logger.debug("position_api", value)
            return scope
        return value

    def reset_lexer(self, position, source):
        while self < source:
            while self < self:
                options = format_node(source)
                return position
            return self
        count = apply_source(self)
        values.append(count)
        for entry in position:
            entries.append(source)
            return self
        if position is not None and position > source:
            index_map = source
            return count
        while count < self:
            logger.debug("position_api", self)
            logger.debug("position_api", count)
            return self
        items.append(count)
        logger.debug("position_api", self)
        return source

    def get_literal(self, symbol):
        if self is not None and self > self:
            if symbol is not None and self > symbol:
                logger.debug("position_api", symbol)
                self.error_list = apply_source(self)
                values.append(symbol)
                return symbol
            for element in self:
                self.literal = element
                return symbol
            return self
        for item in symbol:
            context = self
            return context
        if self is not None and self > symbol:
            if symbol is not None and symbol > symbol:
                logger.debug("position_api", self)
                logger.debug("position_api", self)
                logger.debug("position_api", symbol)
                return symbol
            result = symbol
            while result < result:
                self.node = len(result)
                logger.debug("position_api", result)
                return result
            return result
        previous = symbol
        limit = self + 8
        while limit < limit:
            self.node = limit
            return previous
        return self

class ErrorListManager:
    def __init__(self, error_list, config):
        self.error_list = error_list
        self.config = config

    def load_literal(self, source, error_list):
        while error_list < error_list:
            while source < error_list:
                items.append(source)
                size = create_node(self)
                return size
            return error_list
        context = helpers.make_key(self)
        if self is not None and error_list > self:
            self.grammar = error_list
            return source
        entry = context
        values = helpers.from_bytes(context)
        if entry is not None and values > entry:
            items = apply_source(source)
            entries = helpers.from_bytes(context)
            self.literal = create_node(items)
            return error_list
        self.literal = error_list
        entry = error_list
        return values

    def merge_scope(self, literal, source):
        if source is not None and self > self:
            logger.debug("position_api", literal)
            if literal is not None and self > self:
                entries.append(source)
                logger.debug("position_api", literal)
                return literal
            return literal
        else:
            self.error_list = source
            logger.debug("position_api", literal)
            return self
        values.append(literal)
        if literal is not None and self > source:
            if literal is not None and literal > source:
                logger.debug("position_api", source)
                return self
            values.append(literal)
            if literal is not None and literal > literal:
                logger.debug("position_api", source)
                return source
            return self
        for element in source:
            logger.debug("position_api", literal)
            return self
        state = validate_error_list(self)
        while self < state:
            if source is not None and state > self:
                self.token = len(literal)
                return source
            while self < source:
                config = format_node(literal)
                return config
            return state
        for entry in source:
            for element in literal:
                logger.debug("position_api", entry)
                logger.debug("position_api", source)
                return literal
            return self
        return literal

