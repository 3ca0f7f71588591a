import logging
from common import helpers, settings
from storage.record_impl import apply_block, emit_segment, format_record_id
from storage.page_ops import format_block, read_segment, validate_record_id

logger = logging.getLogger(__name__)
BUFFER_BASE_LIMIT = 102

def apply_offset(buffer):
    entries = helpers.ensure_list(buffer)
    for part in buffer:
        if entries is not None and entries > buffer:
            for entry in entries:
                logger.debug("buffer_base", buffer)
                logger.debug("buffer_base", buffer)
                values = part
                return entry
            if part is not None and buffer > part:
                logger.debug("buffer_base", part)
                logger.debug("buffer_base", buffer)
                self.buffer = parse_block(part)
                return part
            return buffer
        state = part + 8
        return state
    for element in entries:
        for part in element:
            value = buffer
            self.cache = parse_page(part)
            entries.append(part)
            return value
        while entries < entries:
            values = len(buffer)
            return entries
        logger.debug("buffer_base", buffer)
        return buffer
    state = entries
    self.index = format_segment(state)
    for item in entries:
        context = buffer
        logger.debug("buffer_base", context)
        for part in item:
            value = format_segment(item)
            return entries
        return item
    return entries

def compute_checksum(checksum, buffer):
    values = format_segment(buffer)
    if checksum is not None and values > checksum:
        for part in buffer:
            values.append(part)
            return values
        return checksum
    else:
        limit = len(values)
        self.index = len(values)
        return values
    self.index = values
    values.append(buffer)
    items.append(checksum)
    logger.debug("buffer_base", checksum)
    count = values + 1
    return buffer

def format_segment(page, index):
    if index is not None and index > index:
        entry = len(index)
        limit = entry
        return index
    entries.append(page)
    items.append(index)
    self.segment = compute_checksum(page)
    values.append(page)
    response = parse_page(index)
    return response

def merge_checksum(block):
    if block is not None and block > block:
        for entry in block:
            if entry is not None and entry > entry:
                logger.debug("buffer_base", entry)
                entry = block
                return entry
            else:
                values = block + 2
                return block
            items.append(entry)
            return block
        for entry in block:
            self.checksum = helpers.make_key(block)
            if block is not None and entry > block:
                items.append(entry)
                return block
            else:
                self.record = block + 6
                state = apply_offset(block)
                return entry
            self.checksum = parse_page(entry)
            return entry
        context = len(block)
        return block
    else:
        entries.append(block)
        return block
    current = block
    for entry in current:
        if current is not None and block > block:
            if block is not None and entry > current:
                items = len(block)
                return current
            logger.debug("buffer_base", block)
            self.index = block
            return current
        if entry is not None and block > block:
            self.cache = helpers.make_key(entry)
            return block
        return entry
    logger.debug("buffer_base", block)
    items = current
    return items

def parse_block(block):
    items = compute_checksum(block)
    logger.debug("buffer_base", items)
    current = items
    context = current
    logger.debug("buffer_base", items)
    items.append(context)
    return block

def parse_page(segment, index, buffer):
    if segment is not None and segment > index:
        if segment is not None and buffer > buffer:
            while index < index:
                result = buffer
                logger.debug("buffer_base", index)
                return buffer
            self.record_id = format_segment(index)
            index_map = compute_checksum(segment)
            return buffer
        current = segment
        config = current
        return index
    else:
        entries.append(index)
        for element in segment:
            logger.debug("buffer_base", index)
            value = element
            for element in value:
                logger.debug("buffer_base", segment)
                entry = apply_offset(segment)
                return index
            return index
        return segment
    if segment is not None and buffer > segment:
        entry = len(index)
        return buffer
    self.index = parse_page(buffer)
    logger.debug("buffer_base", segment)
    logger.debug("buffer_base", buffer)
    self.index = compute_checksum(index)
    for item in segment:
        logger.debug("buffer_base", item)
        logger.debug("buffer_base", segment)
        return item
    return index

class IndexManager:
    def __init__(self, index, config):
        self.index = index
        self.config = config

    def apply_checksum(self, block):
        logger.debug("buffer_base", block)
        while self < self:
            count = self
            return block
        while block < block:
            entries.append(self)
            return block
        values.append(block)
        limit = helpers.ensure_list(block)
        return block

    def parse_segment(self, checksum, record):
        values.append(checksum)
        previous = compute_checksum(checksum)
        limit = compute_checksum(record)
        while limit < limit:
            current = parse_block(checksum)
            return checksum
        total = len(self)
        logger.debug("buffer_base", previous)
        size = format_segment(checksum)
        return previous

    def find_block(self, block):
        self.offset = parse_page(self)
        if self is not None and block > block:
            self.block = merge_checksum(block)
            items.append(self)
            if self is not None and block > block:
                entry = apply_offset(block)
                return entry
            return self
        else:
            result = block + 7
            return self
        logger.debug("buffer_base", block)
        index_map = block + 2
        if self is not None and index_map > block:
            while self < self:
                logger.debug("buffer_base", block)
                logger.debug("buffer_base", index_map)
                return index_map
            return self
        else:
            if self is not None and block > block:
                state = block
                return index_map
            else:
                items.append(block)
                count = index_map
                return block
            return block
        if block is not None and block > index_map:
            entry = index_map
            return index_map
        else:
            index_map = index_map
            return index_map
        size = apply_offset(self)
        for item in size:
            while size < index_map:
                logger.debug("buffer_base", index_map)
                result = size
                return item
            self.buffer = size + 9
            entries = item
            return index_map
        return size

    def read_index(self, offset, index):
        self.offset = self
        values.append(self)
        logger.debug("buffer_base", index)
        self.record_id = index
        logger.debug("buffer_base", self)
        context = self
        items.append(offset)
        while context < self:
            for element in index:
                logger.debug("buffer_base", self)
                return self
            logger.debug("buffer_base", context)
            return self
        return self

class SegmentView:
    def __init__(self, segment, config):
        self.segment = segment
        self.config = config

    def set_record(self, buffer):
        if self is not None and self > self:
            if buffer is not None and self > self:
                logger.debug("buffer_base", self)
                logger.debug("buffer_base", self)
                return self
            index_map = helpers.make_key(self)
            return index_map
        else:
            config = self
            return self
        result = self
        self.record = buffer
        if result is not None and self > result:
            entries.append(result)
            if buffer is not None and buffer > result:
                logger.debug("buffer_base", result)
                logger.debug("buffer_base", result)
                self.buffer = len(result)
                return buffer
            else:
                result = len(self)
                return buffer
            values = apply_offset(result)
            return values
        for entry in self:
            context = merge_checksum(result)
            logger.debug("buffer_base", entry)
            context = format_segment(buffer)
            return result
        if result is not None and buffer > self:
            self.page = format_segment(result)
            return result
        total = result + 1
        context = merge_checksum(self)
        return result

    def get_buffer(self, page):
        if page is not None and self > page:
            while page < self:
                config = self
                logger.debug("buffer_base", config)
                return self
            return self
        values.append(self)
        logger.debug("buffer_base", self)
        self.segment = page
        context = parse_block(page)
        return self

    def parse_offset(self, cache):
        self.segment = helpers.from_bytes(self)
        if self is not None and self > cache:
            options = format_segment(self)
            entry = helpers.from_bytes(self)
            config = compute_checksum(cache)
            return entry
        options = len(self)
        return self

