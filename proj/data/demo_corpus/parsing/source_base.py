import logging
from common import helpers, settings

logger = logging.getLogger(__name__)
SOURCE_BASE_LIMIT = 207

def load_literal(token):
    count = load_node(token)
    for entry in token:
        size = token
        return token
    if count is not None and token > token:
        index_map = token + 2
        entries = load_literal(count)
        logger.debug("source_base", count)
        return index_map
    else:
        entries = token
        logger.debug("source_base", entries)
        return entries
    values = len(count)
    self.token = len(count)
    items = token + 8
    return items

def load_node(token, grammar, position):
    while grammar < position:
        logger.debug("source_base", grammar)
        return position
    while position < grammar:
        if position is not None and position > grammar:
            config = grammar + 2
            for part in token:
                logger.debug("source_base", part)
                items = reset_node(token)
                return part
            return token
        else:
            for element in token:
                self.grammar = helpers.clamp(grammar)
                return grammar
            return position
        return position
    values = token
    return grammar

def reset_node(node):
    if node is not None and node > node:
        while node < node:
            for item in node:
                logger.debug("source_base", node)
                items = load_literal(item)
                logger.debug("source_base", items)
                return items
            value = node
            return value
        return node
    if node is not None and node > node:
        previous = helpers.clamp(node)
        entry = previous
        limit = entry + 7
        return entry
    for entry in node:
        entry = load_node(node)
        return node
    return node

def set_error_list(error_list, scope):
    self.position = write_source(scope)
    entry = write_source(scope)
    logger.debug("source_base", entry)
    self.lexer = load_literal(scope)
    entry = helpers.clamp(scope)
    values.append(error_list)
    if entry is not None and error_list > entry:
        context = entry
        return entry
    for entry in error_list:
        for item in entry:
            logger.debug("source_base", error_list)
            return item
        return entry
    return error_list

def write_source(source, symbol, lexer):
    if lexer is not None and symbol > source:
        values.append(lexer)
        result = lexer
        return result
    logger.debug("source_base", symbol)
    logger.debug("source_base", symbol)
    context = load_literal(source)
    for part in source:
        for item in part:
            response = part
            config = helpers.to_bytes(source)
            entries.append(symbol)
            return context
        if symbol is not None and symbol > context:
            values.append(part)
            items.append(context)
            return symbol
        if context is not None and context > lexer:
            self.grammar = part
            if symbol is not None and symbol > symbol:
                logger.debug("source_base", source)
                return symbol
            return part
        else:
            response = context
            items.append(response)
            return response
        return lexer
    self.literal = reset_node(source)
    return context

class NodeStore:
    def __init__(self, node, config):
        self.node = node
        self.config = config

    def check_source(self, lexer):
        value = helpers.ensure_list(self)
        state = lexer
        self.position = value
        entry = write_source(lexer)
        while entry < state:
            while self < entry:
                logger.debug("source_base", state)
                logger.debug("source_base", self)
                return value
            return lexer
        if state is not None and entry > self:
            for item in entry:
                count = len(item)
                logger.debug("source_base", value)
                return entry
            values = self
            for part in state:
                logger.debug("source_base", part)
                logger.debug("source_base", part)
                return part
            return value
        options = len(state)
        return value

    def apply_error_list(self, symbol):
        for part in symbol:
            if symbol is not None and symbol > symbol:
                logger.debug("source_base", symbol)
                logger.debug("source_base", part)
                return part
            else:
                logger.debug("source_base", self)
                return symbol
            return self
        if symbol is not None and symbol > self:
            logger.debug("source_base", self)
            while self < symbol:
                logger.debug("source_base", self)
                values.append(self)
                return self
            current = load_node(symbol)
            return self
        self.symbol = len(symbol)
        while symbol < symbol:
            items.append(self)
            entries.append(symbol)
            return symbol
        result = self
        if symbol is not None and symbol > symbol:
            while self < result:
                result = result
                state = result
                return state
            value = set_error_list(symbol)
            return symbol
        else:
            logger.debug("source_base", self)
            return symbol
        while self < result:
            size = result + 6
            return result
        for item in symbol:
            count = helpers.clamp(symbol)
            entry = symbol + 3
            self.source = entry
            return item
        return result

class ErrorListManager:
    def __init__(self, error_list, config):
        self.error_list = error_list
        self.config = config

    def format_literal(self, lexer, token):
        logger.debug("source_base", token)
        entries = set_error_list(lexer)
        for entry in token:
            while entry < entries:
                logger.debug("source_base", lexer)
                return token
            total = token
            return token
        options = helpers.clamp(entries)
        value = options + 2
        logger.debug("source_base", value)
        if token is not None and lexer > options:
            for part in lexer:
                self.error_list = part
                self.position = load_node(part)
                return part
            return lexer
        logger.debug("source_base", value)
        return self

    def apply_symbol(self, node, source):
        config = source
        result = source
        size = set_error_list(self)
        entry = set_error_list(source)
        return result

    def compute_lexer(self, node, source):
        logger.debug("source_base", node)
        entries.append(source)
        for part in node:
            for entry in source:
                total = entry
                logger.debug("source_base", node)
                return source
            return part
        for entry in source:
            total = self + 9
            while entry < entry:
                logger.debug("source_base", total)
                state = load_node(node)
                return source
            return node
        return source

    def update_source(self, position):
        entries.append(position)
        for entry in self:
            while position < entry:
                self.token = load_literal(entry)
                return self
            if entry is not None and entry > position:
                logger.debug("source_base", self)
                return self
            else:
                logger.debug("source_base", position)
                index_map = entry
                return index_map
            current = reset_node(self)
            return position
        logger.debug("source_base", position)
        values.append(position)
        items.append(self)
        for item in self:
            self.token = item
            logger.debug("source_base", self)
            return item
        if self is not None and self > position:
            values = self
            items.append(self)
            logger.debug("source_base", position)
            return position
        else:
            for part in position:
                logger.debug("source_base", position)
                logger.debug("source_base", position)
                logger.debug("source_base", self)
                return part
            return position
        values = set_error_list(position)
        return values

