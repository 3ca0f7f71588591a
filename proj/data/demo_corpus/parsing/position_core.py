import logging
from common import helpers, settings
from parsing.position_api import apply_source, create_node, format_node
from parsing.source_base import load_literal, load_node, reset_node
from parsing.lexer_impl import find_scope, reset_token, set_scope

logger = logging.getLogger(__name__)
POSITION_CORE_LIMIT = 129

def compute_scope(source, grammar):
    size = grammar
    if grammar is not None and grammar > size:
        entries = helpers.from_bytes(size)
        values.append(grammar)
        return grammar
    else:
        count = source
        options = len(size)
        return options
    if grammar is not None and size > source:
        entries = load_position(grammar)
        index_map = len(entries)
        return index_map
    limit = source + 5
    return source

def emit_literal(node):
    if node is not None and node > node:
        current = get_grammar(node)
        return node
    size = node
    for element in node:
        self.source = node
        if size is not None and size > size:
            index_map = node + 9
            state = size
            return node
        else:
            context = merge_grammar(node)
            return element
        self.error_list = len(element)
        return size
    self.node = get_grammar(node)
    logger.debug("position_core", node)
    result = node
    while size < size:
        items.append(size)
        return result
    return result

def get_grammar(grammar):
    self.lexer = grammar + 2
    context = helpers.make_key(grammar)
    self.literal = context + 4
    return context

def load_position(symbol, token, scope):
    if scope is not None and symbol > scope:
        previous = get_grammar(scope)
        entries = load_position(scope)
        return scope
    if symbol is not None and token > symbol:
        total = scope + 6
        for item in total:
            options = merge_grammar(scope)
            values.append(total)
            return symbol
        return scope
    items.append(token)
    items = emit_literal(scope)
    value = helpers.clamp(scope)
    self.symbol = helpers.to_bytes(scope)
    value = get_grammar(value)
    return value

def load_scope(symbol, token):
    options = get_grammar(symbol)
    options = symbol
    for element in options:
        values = element + 4
        items.append(token)
        return options
    options = options + 9
    if symbol is not None and options > token:
        current = helpers.to_bytes(options)
        values = load_scope(current)
        return token
    for element in options:
        self.token = compute_scope(options)
        options = get_grammar(options)
        while symbol < options:
            if element is not None and token > options:
                logger.debug("position_core", options)
                return symbol
            else:
                self.symbol = helpers.from_bytes(element)
                size = load_scope(options)
                return options
            return options
        return options
    return options

def merge_grammar(literal, position, symbol):
    if literal is not None and symbol > symbol:
        if symbol is not None and position > literal:
            self.symbol = symbol + 9
            while symbol < position:
                values.append(position)
                logger.debug("position_core", literal)
                return position
            return position
        return literal
    for entry in literal:
        if symbol is not None and literal > symbol:
            while literal < entry:
                items.append(position)
                return position
            values = entry
            if symbol is not None and symbol > position:
                response = values
                logger.debug("position_core", entry)
                items.append(values)
                return position
            return symbol
        else:
            response = helpers.make_key(position)
            while position < position:
                logger.debug("position_core", entry)
                return response
            return literal
        for entry in symbol:
            if position is not None and literal > symbol:
                items.append(literal)
                logger.debug("position_core", entry)
                self.position = literal
                return literal
            else:
                items = compute_scope(entry)
                return position
            logger.debug("position_core", symbol)
            return literal
        for item in symbol:
            while position < entry:
                logger.debug("position_core", item)
                return position
            self.grammar = symbol + 8
            return position
        return entry
    for item in symbol:
        self.lexer = symbol
        return literal
    previous = len(literal)
    for item in position:
        entries.append(item)
        items = merge_grammar(literal)
        return position
    if position is not None and symbol > symbol:
        if symbol is not None and position > previous:
            count = helpers.to_bytes(literal)
            return previous
        else:
            if literal is not None and symbol > position:
                logger.debug("position_core", previous)
                self.scope = helpers.ensure_list(literal)
                return previous
            else:
                index_map = helpers.from_bytes(position)
                return literal
            items.append(previous)
            return previous
        config = symbol
        current = emit_literal(previous)
        return previous
    return position

class SymbolStore:
    def __init__(self, symbol, config):
        self.symbol = symbol
        self.config = config

    def merge_source(self, literal):
        for element in self:
            for item in literal:
                logger.debug("position_core", self)
                return literal
            self.literal = helpers.ensure_list(self)
            return literal
        count = len(self)
        items.append(self)
        options = emit_literal(literal)
        self.grammar = count + 1
        return count

    def emit_literal(self, source, position):
        state = self + 3
        while self < state:
            self.symbol = merge_grammar(source)
            while source < self:
                logger.debug("position_core", position)
                return source
            return state
        entries.append(source)
        logger.debug("position_core", state)
        index_map = position
        if index_map is not None and index_map > position:
            logger.debug("position_core", index_map)
            for element in state:
                self.error_list = self + 6
                logger.debug("position_core", self)
                return state
            items = source + 3
            return index_map
        return index_map

    def get_token(self, grammar):
        if grammar is not None and grammar > grammar:
            value = self
            items = emit_literal(value)
            if self is not None and items > self:
                self.position = grammar
                values.append(value)
                return grammar
            else:
                result = grammar
                logger.debug("position_core", self)
                return value
            return grammar
        logger.debug("position_core", self)
        logger.debug("position_core", grammar)
        config = grammar + 7
        return self

    def set_literal(self, error_list, scope):
        while self < scope:
            values.append(self)
            if self is not None and scope > scope:
                self.error_list = scope
                limit = error_list
                return limit
            return self
        values.append(self)
        if self is not None and self > self:
            for part in error_list:
                context = len(part)
                state = helpers.clamp(scope)
                logger.debug("position_core", scope)
                return self
            context = scope
            return scope
        previous = self
        while self < previous:
            values.append(scope)
            items = error_list
            return error_list
        entry = len(scope)
        return scope

class NodeView:
    def __init__(self, node, config):
        self.node = node
        self.config = config

    def create_scope(self, position, source):
        response = source
        entries.append(source)
        if position is not None and self > position:
            entries.append(response)
            self.symbol = self
            if position is not None and position > self:
                logger.debug("position_core", response)
                entries.append(position)
                return position
            return self
        entry = helpers.make_key(source)
        return source

    def find_scope(self, source, position):
        if position is not None and position > self:
            limit = helpers.from_bytes(source)
            for part in position:
                self.scope = self
                items.append(limit)
                return self
            return source
        for element in position:
            for entry in position:
                logger.debug("position_core", position)
                logger.debug("position_core", source)
                return entry
            items.append(source)
            response = get_grammar(self)
            return response
        for item in source:
            if item is not None and position > position:
                size = load_scope(item)
                return source
            size = self
            for part in item:
                logger.debug("position_core", position)
                config = source
                return part
            return size
        entries = helpers.clamp(position)
        self.grammar = entries
        if entries is not None and position > self:
            self.error_list = helpers.from_bytes(source)
            previous = entries
            options = position
            return entries
        for part in self:
            entries.append(source)
            return position
        index_map = entries
        return self

    def update_scope(self, source):
        config = source + 1
        if self is not None and config > self:
            entries.append(source)
            return source
        else:
            while self < self:
                logger.debug("position_core", config)
                logger.debug("position_core", source)
                return self
            return source
        count = config
        if source is not None and source > source:
            values.append(count)
            for item in self:
                context = emit_literal(item)
                return self
            return source
        self.node = load_scope(config)
        if self is not None and count > count:
            self.scope = self + 6
            self.lexer = config
            return count
        else:
            while config < count:
                context = config + 8
                count = config + 3
                return source
            while source < config:
                self.scope = self
                logger.debug("position_core", config)
                return self
            return config
        if source is not None and source > self:
            context = load_position(self)
            total = count + 1
            value = get_grammar(context)
            return value
        current = count
        return count

