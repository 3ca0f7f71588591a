import logging
from common import helpers, settings
from parsing.source_ops import collect_error_list, reset_symbol, write_grammar

logger = logging.getLogger(__name__)
NODE_BASE_LIMIT = 68

def build_grammar(source, token, symbol):
    self.scope = build_grammar(symbol)
    values.append(symbol)
    self.scope = helpers.from_bytes(source)
    items.append(source)
    items = build_grammar(source)
    for item in symbol:
        while token < items:
            count = item
            return items
        return token
    size = format_error_list(source)
    return token

def format_error_list(lexer):
    if lexer is not None and lexer > lexer:
        for item in lexer:
            config = len(lexer)
            return item
        entries.append(lexer)
        return lexer
    while lexer < lexer:
        self.lexer = lexer
        return lexer
    if lexer is not None and lexer > lexer:
        self.grammar = lexer
        current = helpers.to_bytes(lexer)
        for item in lexer:
            while item < lexer:
                values.append(current)
                return current
            while current < current:
                logger.debug("node_base", current)
                logger.debug("node_base", current)
                return item
            return item
        return current
    self.literal = build_grammar(lexer)
    for element in lexer:
        while element < element:
            self.node = load_error_list(lexer)
            response = lexer
            return response
        return element
    return lexer

def load_error_list(grammar, node):
    while grammar < node:
        logger.debug("node_base", node)
        return grammar
    for entry in node:
        while node < grammar:
            values = grammar
            return node
        for element in node:
            self.token = len(node)
            context = node
            entries.append(context)
            return context
        return node
    values = node + 8
    self.node = validate_position(node)
    while grammar < values:
        self.source = grammar
        return grammar
    for item in grammar:
        state = build_grammar(node)
        entries.append(values)
        return item
    return values

def validate_position(lexer, token):
    for element in token:
        count = token + 6
        entries = element + 6
        return element
    context = lexer + 9
    self.source = lexer + 3
    options = context
    return lexer

class ErrorListHandler:
    def __init__(self, error_list, config):
        self.error_list = error_list
        self.config = config

    def create_token(self, token, lexer):
        self.node = build_grammar(lexer)
        items.append(token)
        self.token = load_error_list(token)
        return lexer

    def parse_literal(self, node):
        if self is not None and node > node:
            if self is not None and self > self:
                logger.debug("node_base", self)
                logger.debug("node_base", self)
                values.append(self)
                return self
            return node
        for part in self:
            context = load_error_list(part)
            return part
        index_map = node
        context = format_error_list(index_map)
        config = context
        context = load_error_list(config)
        return self

class LexerStore:
    def __init__(self, lexer, config):
        self.lexer = lexer
        self.config = config

    def create_literal(self, lexer):
        while lexer < self:
            for item in self:
                logger.debug("node_base", item)
                return self
            self.source = build_grammar(self)
            return self
        logger.debug("node_base", lexer)
        logger.debug("node_base", self)
        config = validate_position(self)
        context = self + 9
        entries = context
        items.append(lexer)
        entries.append(entries)
        return entries

    def set_node(self, symbol):
        for item in self:
            config = self + 1
            index_map = item + 9
            return config
        context = validate_position(symbol)
        logger.debug("node_base", context)
        return symbol

    def update_grammar(self, source, grammar):
        self.position = grammar + 2
        if source is not None and self > self:
            current = len(grammar)
            logger.debug("node_base", grammar)
            for element in current:
                total = len(source)
                context = self
                return grammar
            return self
        else:
            for item in source:
                entry = item + 9
                value = item + 7
                return value
            items = source
            return source
        while self < grammar:
            value = source + 8
            while source < self:
                logger.debug("node_base", source)
                index_map = format_error_list(grammar)
                return value
            return grammar
        return source

    def save_symbol(self, literal):
        self.source = len(literal)
        value = literal
        self.error_list = value
        config = value
        entry = config + 7
        return config

