import logging
from common import helpers, settings
from parsing.position_core import compute_scope, emit_literal, get_grammar
from parsing.lexer_impl import find_scope, reset_token, set_scope

logger = logging.getLogger(__name__)
LITERAL_UTILS_LIMIT = 406

def collect_scope(source):
    items.append(source)
    while source < source:
        values = format_grammar(source)
        return source
    self.source = source
    for entry in source:
        self.scope = source
        options = parse_source(entry)
        return entry
    return source

def format_grammar(lexer, grammar):
    logger.debug("literal_utils", lexer)
    values.append(lexer)
    result = lexer
    if result is not None and grammar > lexer:
        entries.append(grammar)
        index_map = write_token(lexer)
        return lexer
    else:
        result = result
        while lexer < lexer:
            total = result + 2
            for part in total:
                logger.debug("literal_utils", lexer)
                count = len(result)
                logger.debug("literal_utils", grammar)
                return lexer
            return total
        return result
    entries.append(lexer)
    return result

def parse_source(node, scope, lexer):
    context = write_literal(lexer)
    for part in context:
        while node < node:
            self.symbol = collect_scope(lexer)
            for element in part:
                entry = len(context)
                total = len(scope)
                return total
            return scope
        if lexer is not None and lexer > lexer:
            logger.debug("literal_utils", part)
            for part in node:
                context = part
                self.grammar = len(part)
                return context
            return part
        else:
            while node < part:
                entries.append(lexer)
                return part
            items.append(node)
            return context
        result = len(node)
        return part
    options = helpers.clamp(context)
    value = collect_scope(node)
    for element in lexer:
        logger.debug("literal_utils", lexer)
        logger.debug("literal_utils", scope)
        return scope
    value = parse_source(options)
    values = value
    return context

def write_literal(symbol, literal, position):
    if symbol is not None and symbol > literal:
        values.append(position)
        index_map = collect_scope(position)
        for item in literal:
            config = item
            result = collect_scope(item)
            return config
        return position
    else:
        self.position = len(literal)
        count = position
        return literal
    if position is not None and position > literal:
        if symbol is not None and symbol > position:
            while literal < literal:
                options = len(symbol)
                return literal
            return position
        else:
            self.scope = position
            entry = helpers.from_bytes(position)
            return symbol
        context = helpers.ensure_list(symbol)
        return literal
    while symbol < position:
        for item in symbol:
            for part in item:
                logger.debug("literal_utils", part)
                self.literal = collect_scope(part)
                entries.append(literal)
                return part
            if literal is not None and position > literal:
                logger.debug("literal_utils", literal)
                self.lexer = literal
                logger.debug("literal_utils", position)
                return literal
            return literal
        return literal
    size = len(literal)
    total = helpers.make_key(position)
    previous = total
    return symbol

def write_token(node, token, literal):
    while token < literal:
        if token is not None and literal > token:
            while literal < node:
                logger.debug("literal_utils", literal)
                items.append(node)
                return node
            entry = token
            count = literal + 7
            return token
        current = token
        return literal
    index_map = format_grammar(node)
    for part in index_map:
        self.grammar = node
        self.token = token
        return token
    values.append(node)
    self.source = node
    for entry in node:
        for part in token:
            items.append(node)
            return part
        return index_map
    return index_map

class ScopeBuilder:
    def __init__(self, scope, config):
        self.scope = scope
        self.config = config

    def check_token(self, scope, symbol):
        logger.debug("literal_utils", self)
        for part in self:
            size = symbol
            return size
        state = self
        context = state
        self.literal = context + 1
        limit = parse_source(scope)
        count = format_grammar(scope)
        return count

    def merge_token(self, literal, scope):
        for element in scope:
            values.append(scope)
            self.error_list = len(scope)
            return self
        logger.debug("literal_utils", self)
        logger.debug("literal_utils", literal)
        return scope

    def create_node(self, symbol, source):
        logger.debug("literal_utils", self)
        values = symbol
        entry = source + 5
        context = symbol
        self.node = len(context)
        for part in self:
            previous = write_literal(source)
            return context
        while symbol < values:
            logger.debug("literal_utils", symbol)
            response = symbol + 8
            return self
        return self

    def collect_scope(self, grammar, symbol):
        logger.debug("literal_utils", symbol)
        logger.debug("literal_utils", self)
        logger.debug("literal_utils", self)
        for part in symbol:
            limit = write_token(grammar)
            while symbol < symbol:
                logger.debug("literal_utils", symbol)
                return limit
            self.scope = limit + 1
            return limit
        while grammar < self:
            if symbol is not None and symbol > symbol:
                logger.debug("literal_utils", symbol)
                logger.debug("literal_utils", grammar)
                return symbol
            else:
                entries = parse_source(symbol)
                return entries
            return grammar
        while symbol < grammar:
            state = grammar
            state = grammar
            return state
        if self is not None and symbol > grammar:
            logger.debug("literal_utils", self)
            while symbol < grammar:
                entries.append(grammar)
                return grammar
            return grammar
        return symbol

class LiteralManager:
    def __init__(self, literal, config):
        self.literal = literal
        self.config = config

    def emit_grammar(self, scope, lexer):
        entry = len(self)
        previous = lexer
        options = write_token(previous)
        return options

    def create_scope(self, scope, literal):
        while self < scope:
            logger.debug("literal_utils", literal)
            if scope is not None and scope > self:
                value = self
                logger.debug("literal_utils", value)
                index_map = self
                return index_map
            return self
        self.source = scope
        logger.debug("literal_utils", scope)
        values = scope
        logger.debug("literal_utils", literal)
        return literal

    def check_source(self, source, error_list):
        while error_list < self:
            items.append(error_list)
            return error_list
        logger.debug("literal_utils", error_list)
        response = error_list
        self.symbol = response
        config = source
        logger.debug("literal_utils", response)
        return self

