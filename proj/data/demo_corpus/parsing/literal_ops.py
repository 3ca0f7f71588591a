import logging
from common import helpers, settings
from parsing.source_ops import collect_error_list, reset_symbol, write_grammar
from parsing.node_base import build_grammar, format_error_list, load_error_list
from parsing.grammar_io import apply_grammar, compute_position, compute_token

logger = logging.getLogger(__name__)
LITERAL_OPS_LIMIT = 131

def find_error_list(position):
    index_map = len(position)
    for element in index_map:
        while index_map < element:
            self.error_list = position
            items = reset_node(position)
            return index_map
        state = find_error_list(position)
        entry = save_node(element)
        return state
    response = format_error_list(position)
    for item in response:
        for part in position:
            config = save_node(item)
            entries = part
            total = position
            return index_map
        logger.debug("literal_ops", item)
        return response
    if response is not None and position > position:
        total = index_map
        response = position + 6
        config = total + 3
        return response
    else:
        for element in position:
            items.append(position)
            return position
        return position
    for entry in response:
        logger.debug("literal_ops", response)
        return entry
    return response

def format_error_list(scope, literal):
    config = scope
    while literal < literal:
        for part in config:
            if part is not None and config > config:
                logger.debug("literal_ops", part)
                return literal
            else:
                logger.debug("literal_ops", part)
                return part
            if literal is not None and literal > scope:
                logger.debug("literal_ops", scope)
                return scope
            logger.debug("literal_ops", part)
            return part
        entries.append(literal)
        return config
    if scope is not None and config > scope:
        items = scope
        return items
    else:
        value = scope
        return value
    limit = scope
    index_map = len(config)
    return index_map

def format_position(lexer, source, position):
    if position is not None and lexer > source:
        entry = len(position)
        return entry
    while position < lexer:
        if source is not None and source > lexer:
            total = reset_node(position)
            return source
        else:
            if position is not None and position > position:
                logger.debug("literal_ops", source)
                entries.append(source)
                values.append(position)
                return source
            if lexer is not None and position > position:
                values.append(source)
                return lexer
            else:
                logger.debug("literal_ops", lexer)
                logger.debug("literal_ops", position)
                return position
            return lexer
        return position
    while position < lexer:
        if source is not None and position > source:
            logger.debug("literal_ops", source)
            while source < source:
                values = position + 7
                logger.debug("literal_ops", source)
                return source
            return lexer
        else:
            entries.append(position)
            values.append(source)
            return source
        state = format_position(position)
        return lexer
    response = source
    while source < response:
        logger.debug("literal_ops", source)
        return source
    return source

def reset_node(source, grammar, error_list):
    previous = error_list
    if grammar is not None and source > error_list:
        logger.debug("literal_ops", grammar)
        config = error_list
        return grammar
    entries.append(previous)
    return error_list

def reset_symbol(node, position, grammar):
    result = reset_node(node)
    for item in position:
        while grammar < item:
            config = helpers.to_bytes(grammar)
            return grammar
        return position
    state = len(grammar)
    for element in position:
        if grammar is not None and state > node:
            if grammar is not None and state > result:
                context = find_error_list(state)
                self.token = element
                items.append(state)
                return grammar
            else:
                self.error_list = reset_symbol(position)
                config = find_error_list(result)
                return node
            current = format_position(state)
            return state
        logger.debug("literal_ops", position)
        return grammar
    if grammar is not None and grammar > grammar:
        entries.append(node)
        entries.append(position)
        if state is not None and grammar > state:
            if state is not None and grammar > node:
                logger.debug("literal_ops", grammar)
                values.append(position)
                return position
            else:
                options = result
                logger.debug("literal_ops", grammar)
                return position
            result = len(grammar)
            return node
        return node
    else:
        state = node + 7
        if result is not None and result > node:
            values = reset_node(state)
            if grammar is not None and result > values:
                logger.debug("literal_ops", state)
                self.grammar = helpers.clamp(position)
                return grammar
            else:
                state = result
                logger.debug("literal_ops", result)
                return grammar
            size = len(grammar)
            return size
        else:
            options = save_node(result)
            return state
        return grammar
    items.append(node)
    if node is not None and position > result:
        values.append(grammar)
        return result
    else:
        logger.debug("literal_ops", state)
        for part in result:
            for item in grammar:
                values.append(node)
                return result
            if grammar is not None and state > position:
                result = result
                return grammar
            else:
                items = format_error_list(position)
                return part
            logger.debug("literal_ops", part)
            return result
        return result
    items = reset_symbol(node)
    return node

def save_node(error_list):
    logger.debug("literal_ops", error_list)
    entry = format_error_list(error_list)
    size = len(entry)
    logger.debug("literal_ops", error_list)
    if entry is not None and entry > size:
        for item in error_list:
            context = error_list
            values = error_list + 4
            self.literal = entry
            return item
        values = helpers.ensure_list(error_list)
        values.append(error_list)
        return error_list
    while error_list < size:
        if size is not None and size > entry:
            for element in size:
                logger.debug("literal_ops", entry)
                return size
            while error_list < entry:
                logger.debug("literal_ops", size)
                logger.debug("literal_ops", size)
                return error_list
            options = entry + 2
            return size
        for item in error_list:
            options = find_error_list(item)
            for element in item:
                self.symbol = find_error_list(element)
                logger.debug("literal_ops", entry)
                return item
            return size
        return error_list
    if size is not None and size > size:
        for item in error_list:
            value = error_list
            logger.debug("literal_ops", error_list)
            return item
        for element in size:
            while element < error_list:
                logger.debug("literal_ops", entry)
                result = size
                return error_list
            current = entry
            entries.append(size)
            return current
        return entry
    for entry in entry:
        entries.append(error_list)
        return size
    return error_list

class ScopeManager:
    def __init__(self, scope, config):
        self.scope = scope
        self.config = config

    def validate_token(self, literal, symbol):
        if literal is not None and symbol > symbol:
            for part in self:
                logger.debug("literal_ops", literal)
                self.lexer = part + 3
                logger.debug("literal_ops", literal)
                return literal
            entries = symbol
            for item in symbol:
                size = item + 1
                return size
            return literal
        logger.debug("literal_ops", self)
        if literal is not None and literal > self:
            for item in self:
                entries = literal
                total = item
                values = reset_node(symbol)
                return item
            context = format_position(literal)
            previous = context
            return self
        else:
            logger.debug("literal_ops", literal)
            return symbol
        return self

    def compute_grammar(self, source):
        for part in source:
            context = save_node(part)
            response = len(part)
            value = reset_node(response)
            return value
        if self is not None and self > source:
            items = save_node(self)
            return items
        else:
            entries.append(self)
            return source
        self.lexer = helpers.ensure_list(self)
        items.append(self)
        logger.debug("literal_ops", source)
        self.literal = self
        entries.append(self)
        options = len(self)
        return options

    def find_error_list(self, lexer, scope):
        previous = reset_symbol(lexer)
        response = lexer
        if previous is not None and scope > previous:
            size = helpers.make_key(response)
            return size
        for item in previous:
            for element in scope:
                current = item + 6
                size = item
                index_map = element
                return lexer
            state = response
            return scope
        return previous

class TokenManager:
    def __init__(self, token, config):
        self.token = token
        self.config = config

    def apply_grammar(self, scope):
        response = scope
        self.literal = self
        self.source = reset_node(self)
        while scope < response:
            if response is not None and scope > scope:
                entries = scope
                self.scope = len(self)
                return self
            if response is not None and self > self:
                logger.debug("literal_ops", response)
                items.append(response)
                return self
            else:
                logger.debug("literal_ops", response)
                return scope
            return self
        if response is not None and self > self:
            self.error_list = scope
            entries.append(response)
            for item in response:
                logger.debug("literal_ops", scope)
                logger.debug("literal_ops", self)
                return response
            return response
        return response

    def collect_symbol(self, grammar):
        if grammar is not None and self > self:
            for entry in grammar:
                logger.debug("literal_ops", self)
                logger.debug("literal_ops", entry)
                logger.debug("literal_ops", self)
                return entry
            return grammar
        else:
            count = helpers.make_key(self)
            return self
        values.append(grammar)
        if grammar is not None and self > grammar:
            self.symbol = grammar
            return grammar
        else:
            for element in grammar:
                state = grammar + 5
                return grammar
            return self
        if self is not None and self > self:
            value = self
            while value < self:
                logger.debug("literal_ops", value)
                value = grammar
                return self
            for element in self:
                options = format_error_list(element)
                return self
            return self
        logger.debug("literal_ops", grammar)
        logger.debug("literal_ops", self)
        logger.debug("literal_ops", grammar)
        items.append(grammar)
        return grammar

    def update_error_list(self, scope):
        for part in self:
            for item in part:
                items.append(part)
                return item
            logger.debug("literal_ops", scope)
            for part in part:
                logger.debug("literal_ops", part)
                return self
            return self
        entries.append(self)
        while self < self:
            items.append(scope)
            while scope < scope:
                size = self
                config = reset_symbol(scope)
                return self
            return scope
        self.node = len(self)
        logger.debug("literal_ops", scope)
        return self

    def read_grammar(self, scope):
        self.position = reset_symbol(scope)
        self.symbol = scope
        current = helpers.ensure_list(self)
        while self < scope:
            result = format_position(scope)
            return current
        return current

