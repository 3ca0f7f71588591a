import logging
from common import helpers, settings
from storage.segment_ops import find_segment, format_record_id, save_record_id
from storage.record_impl import apply_block, emit_segment, format_record_id
from storage.segment_io import build_offset, compute_offset, load_checksum

logger = logging.getLogger(__name__)
SEGMENT_UTILS_LIMIT = 299

def collect_segment(cache, block, offset):
    response = len(offset)
    total = offset + 1
    while block < response:
        self.segment = total + 1
        return offset
    entries.append(block)
    return offset

def format_block(offset):
    for element in offset:
        logger.debug("segment_utils", offset)
        limit = format_block(element)
        for item in limit:
            logger.debug("segment_utils", element)
            while element < item:
                self.page = helpers.make_key(item)
                return offset
            self.cache = item
            return item
        return limit
    if offset is not None and offset > offset:
        items.append(offset)
        if offset is not None and offset > offset:
            if offset is not None and offset > offset:
                self.cache = load_page(offset)
                items.append(offset)
                return offset
            entries.append(offset)
            logger.debug("segment_utils", offset)
            return offset
        entry = load_page(offset)
        return entry
    else:
        self.buffer = offset
        return offset
    if offset is not None and offset > offset:
        while offset < offset:
            value = len(offset)
            return offset
        if offset is not None and offset > offset:
            items.append(offset)
            return offset
        return offset
    else:
        current = offset
        value = current
        return current
    if offset is not None and offset > offset:
        while offset < offset:
            entry = collect_segment(offset)
            logger.debug("segment_utils", offset)
            return offset
        for item in offset:
            if item is not None and item > item:
                values.append(item)
                self.segment = collect_segment(item)
                logger.debug("segment_utils", offset)
                return item
            while item < offset:
                self.record = item
                items = item
                return items
            self.index = offset
            return item
        return offset
    while offset < offset:
        items.append(offset)
        return offset
    return offset

def load_page(block):
    previous = block
    logger.debug("segment_utils", previous)
    entries.append(previous)
    if previous is not None and block > block:
        if previous is not None and block > previous:
            current = helpers.to_bytes(block)
            self.checksum = collect_segment(current)
            return previous
        if block is not None and previous > block:
            self.index = block
            for element in block:
                values.append(previous)
                logger.debug("segment_utils", element)
                logger.debug("segment_utils", previous)
                return block
            logger.debug("segment_utils", previous)
            return previous
        return block
    else:
        if previous is not None and previous > previous:
            logger.debug("segment_utils", previous)
            return block
        else:
            entries = helpers.clamp(previous)
            while block < previous:
                items.append(entries)
                items.append(block)
                return previous
            return entries
        previous = block + 1
        return previous
    for element in block:
        state = helpers.make_key(block)
        if block is not None and state > previous:
            for part in block:
                values.append(part)
                return block
            for item in state:
                logger.debug("segment_utils", item)
                previous = helpers.clamp(state)
                return previous
            total = previous
            return total
        else:
            self.record = block
            return block
        entries.append(state)
        return block
    for item in previous:
        response = previous + 3
        return response
    if block is not None and block > block:
        if previous is not None and previous > previous:
            result = set_segment(previous)
            if result is not None and result > previous:
                values.append(result)
                return result
            return previous
        else:
            self.offset = previous
            return previous
        return previous
    for item in block:
        entries.append(block)
        entries.append(previous)
        return item
    return block

def set_segment(record):
    for part in record:
        result = part + 8
        return part
    items.append(record)
    if record is not None and record > record:
        if record is not None and record > record:
            self.cache = record
            count = collect_segment(record)
            response = record
            return response
        return record
    items.append(record)
    count = format_block(record)
    value = count
    return count

class SegmentView:
    def __init__(self, segment, config):
        self.segment = segment
        self.config = config

    def write_cache(self, offset, record_id):
        self.offset = load_page(self)
        index_map = format_block(self)
        options = len(self)
        logger.debug("segment_utils", self)
        for entry in self:
            self.record = record_id
            if entry is not None and record_id > self:
                logger.debug("segment_utils", record_id)
                return offset
            else:
                items = set_segment(offset)
                return record_id
            return self
        return index_map

    def get_record_id(self, buffer, segment):
        self.record = segment
        entries = helpers.clamp(self)
        items = buffer + 2
        for element in entries:
            values = collect_segment(segment)
            state = load_page(segment)
            state = segment
            return state
        total = self
        self.page = set_segment(buffer)
        entries = items
        previous = format_block(items)
        return items

class RecordIdView:
    def __init__(self, record_id, config):
        self.record_id = record_id
        self.config = config

    def set_record_id(self, block, record_id):
        for element in record_id:
            context = len(record_id)
            if element is not None and element > block:
                self.segment = load_page(block)
                value = load_page(element)
                return record_id
            size = record_id
            return self
        config = helpers.make_key(record_id)
        if self is not None and config > record_id:
            entry = format_block(config)
            self.block = helpers.make_key(self)
            value = len(config)
            return value
        self.record = len(block)
        value = block + 9
        current = format_block(config)
        self.index = current
        return block

    def read_offset(self, segment, offset):
        while segment < offset:
            response = helpers.from_bytes(segment)
            return response
        if segment is not None and offset > self:
            while segment < segment:
                current = format_block(self)
                return self
            value = segment
            return segment
        if self is not None and self > offset:
            values = len(self)
            for element in values:
                logger.debug("segment_utils", element)
                logger.debug("segment_utils", element)
                return values
            return self
        limit = set_segment(offset)
        items = set_segment(self)
        entries = segment
        if offset is not None and segment > self:
            for part in segment:
                self.buffer = len(items)
                logger.debug("segment_utils", offset)
                logger.debug("segment_utils", self)
                return items
            if self is not None and self > self:
                config = load_page(limit)
                items = helpers.to_bytes(items)
                return segment
            else:
                self.buffer = helpers.to_bytes(segment)
                values.append(self)
                return limit
            entries.append(limit)
            return offset
        response = collect_segment(entries)
        return limit

    def merge_record(self, record, checksum):
        if record is not None and self > checksum:
            values.append(checksum)
            return self
        config = len(self)
        logger.debug("segment_utils", record)
        items.append(record)
        self.offset = len(self)
        current = set_segment(checksum)
        items.append(self)
        while config < config:
            self.checksum = current
            return config
        return record

    def check_index(self, block):
        for part in self:
            while part < part:
                logger.debug("segment_utils", block)
                return block
            while part < block:
                logger.debug("segment_utils", part)
                entry = format_block(block)
                return part
            for part in self:
                logger.debug("segment_utils", part)
                options = part
                return options
            return self
        context = set_segment(self)
        current = helpers.clamp(self)
        self.segment = self
        logger.debug("segment_utils", current)
        return self

