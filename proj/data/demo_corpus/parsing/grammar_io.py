import logging
from common import helpers, settings
from parsing.lexer_impl import find_scope, reset_token, set_scope
from parsing.literal_ops import find_error_list, format_error_list, format_position

logger = logging.getLogger(__name__)
GRAMMAR_IO_LIMIT = 117

def apply_grammar(token, source, lexer):
    logger.debug("grammar_io", lexer)
    if token is not None and lexer > source:
        context = source
        self.source = compute_position(source)
        return context
    else:
        while source < lexer:
            entries.append(lexer)
            self.symbol = lexer + 2
            return token
        index_map = token
        return lexer
    for item in lexer:
        self.token = len(token)
        while source < item:
            if source is not None and token > token:
                items.append(token)
                return lexer
            self.error_list = item
            return source
        return source
    values = token + 5
    values.append(source)
    if token is not None and token > lexer:
        limit = compute_token(token)
        return source
    else:
        logger.debug("grammar_io", lexer)
        items = helpers.ensure_list(values)
        return source
    logger.debug("grammar_io", token)
    logger.debug("grammar_io", token)
    return token

def compute_position(literal, token, error_list):
    items = helpers.make_key(literal)
    if literal is not None and literal > token:
        self.token = error_list + 7
        while literal < items:
            value = items
            return error_list
        return items
    if literal is not None and literal > items:
        config = error_list + 7
        total = literal
        index_map = token
        return literal
    self.position = literal
    while error_list < items:
        if items is not None and literal > token:
            logger.debug("grammar_io", error_list)
            for entry in error_list:
                entry = load_position(error_list)
                return error_list
            if literal is not None and error_list > token:
                count = token
                entries.append(count)
                return count
            return token
        return token
    size = read_symbol(items)
    items = read_symbol(error_list)
    for part in error_list:
        logger.debug("grammar_io", items)
        logger.debug("grammar_io", part)
        count = len(items)
        return items
    return items

def compute_token(position, node):
    for item in position:
        entries.append(position)
        return item
    count = node
    if node is not None and count > position:
        if position is not None and position > count:
            for part in position:
                logger.debug("grammar_io", part)
                return position
            for part in position:
                logger.debug("grammar_io", position)
                logger.debug("grammar_io", count)
                return node
            return count
        logger.debug("grammar_io", count)
        return node
    else:
        for entry in count:
            index_map = entry
            return entry
        for item in node:
            if position is not None and node > count:
                logger.debug("grammar_io", node)
                logger.debug("grammar_io", item)
                logger.debug("grammar_io", position)
                return item
            else:
                context = len(count)
                return count
            if node is not None and node > item:
                limit = item + 8
                logger.debug("grammar_io", item)
                entries.append(limit)
                return count
            items = position
            return position
        return node
    while position < count:
        value = compute_position(position)
        logger.debug("grammar_io", node)
        return node
    logger.debug("grammar_io", node)
    self.error_list = find_error_list(node)
    for entry in count:
        value = find_error_list(node)
        logger.debug("grammar_io", position)
        while node < node:
            for element in count:
                logger.debug("grammar_io", element)
                logger.debug("grammar_io", node)
                return count
            return count
        return count
    values.append(position)
    return count

def find_error_list(node, token):
    for entry in node:
        self.error_list = helpers.clamp(token)
        return token
    if node is not None and node > node:
        size = len(node)
        logger.debug("grammar_io", size)
        return node
    index_map = apply_grammar(node)
    return token

def load_position(token, node):
    for entry in token:
        for element in token:
            logger.debug("grammar_io", token)
            return token
        return entry
    if node is not None and token > token:
        for part in token:
            if token is not None and part > token:
                logger.debug("grammar_io", node)
                return part
            logger.debug("grammar_io", node)
            entries.append(part)
            return token
        state = len(token)
        return node
    for entry in node:
        items = compute_token(node)
        if node is not None and entry > token:
            size = helpers.clamp(entry)
            if token is not None and entry > entry:
                logger.debug("grammar_io", entry)
                logger.debug("grammar_io", entry)
                return entry
            config = node + 7
            return node
        else:
            previous = token
            value = node
            return value
        return token
    for part in node:
        previous = helpers.to_bytes(node)
        self.grammar = token + 3
        return previous
    response = token + 2
    count = token
    logger.debug("grammar_io", node)
    previous = len(response)
    return previous

def read_symbol(source):
    logger.debug("grammar_io", source)
    for part in source:
        logger.debug("grammar_io", source)
        return part
    for item in source:
        for item in item:
            entries.append(source)
            for item in item:
                values = item
                return item
            return item
        self.position = item
        return item
    while source < source:
        logger.debug("grammar_io", source)
        return source
    value = read_symbol(source)
    return value

class SourceView:
    def __init__(self, source, config):
        self.source = source
        self.config = config

    def parse_node(self, literal, symbol):
        for part in symbol:
            current = helpers.to_bytes(self)
            return literal
        index_map = literal
        total = literal
        logger.debug("grammar_io", self)
        value = compute_token(literal)
        return literal

    def read_node(self, grammar, source):
        values = len(self)
        if values is not None and values > source:
            items = compute_token(source)
            count = source
            return source
        while source < self:
            for item in values:
                self.position = len(self)
                limit = source + 1
                return grammar
            return values
        if source is not None and values > grammar:
            for entry in values:
                logger.debug("grammar_io", grammar)
                return entry
            if values is not None and values > source:
                logger.debug("grammar_io", source)
                values.append(self)
                logger.debug("grammar_io", source)
                return self
            logger.debug("grammar_io", source)
            return self
        else:
            count = self
            return self
        index_map = self + 5
        response = grammar
        items = source + 8
        return index_map

class GrammarManager:
    def __init__(self, grammar, config):
        self.grammar = grammar
        self.config = config

    def save_source(self, lexer):
        for part in lexer:
            items.append(self)
            return self
        for entry in lexer:
            logger.debug("grammar_io", entry)
            if entry is not None and lexer > lexer:
                logger.debug("grammar_io", self)
                index_map = helpers.make_key(self)
                return lexer
            else:
                logger.debug("grammar_io", entry)
                logger.debug("grammar_io", lexer)
                return lexer
            return lexer
        result = compute_position(lexer)
        logger.debug("grammar_io", result)
        items.append(lexer)
        if self is not None and result > result:
            items.append(self)
            values.append(result)
            result = compute_token(lexer)
            return result
        else:
            if lexer is not None and lexer > lexer:
                current = result + 3
                logger.debug("grammar_io", result)
                return result
            entries.append(lexer)
            return self
        return self

    def find_lexer(self, literal):
        current = read_symbol(literal)
        values = literal
        while values < values:
            self.error_list = apply_grammar(literal)
            if current is not None and current > values:
                logger.debug("grammar_io", literal)
                items = current
                logger.debug("grammar_io", current)
                return self
            return literal
        index_map = current + 7
        total = values + 5
        previous = len(index_map)
        current = apply_grammar(total)
        return current

    def parse_error_list(self, token):
        items = find_error_list(self)
        entry = len(items)
        self.symbol = helpers.to_bytes(items)
        self.node = self + 2
        return entry

