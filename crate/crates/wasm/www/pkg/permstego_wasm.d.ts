/* tslint:disable */
/* eslint-disable */

export function capacity_bits(n: number): number;

export function decode_cover(observed: string, cover: string, sort_lex: boolean, key: string, sentinel: boolean): string;

export function decode_text(code: string, symbols: string): string;

/**
 * Reorders the cover list (one item per line) so it carries `message`.
 */
export function encode_cover(message: string, cover: string, sort_lex: boolean, key: string, sentinel: boolean): string;

/**
 * Minimal permutation code for `text`, formatted like `[1,5,2,0,4,3]`.
 */
export function encode_text(text: string, symbols: string): string;

export function generate_key(n: number, seed: bigint): string;

/**
 * The integer behind a message, in decimal.
 */
export function message_value(text: string, symbols: string): string;

/**
 * Per-position entropy (bits) of minimal-length codes with `n` items.
 */
export function position_entropy(n: number, samples: number, seed: bigint): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly capacity_bits: (a: number) => number;
    readonly decode_cover: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly decode_text: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly encode_cover: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly encode_text: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly generate_key: (a: number, b: bigint) => [number, number];
    readonly message_value: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly position_entropy: (a: number, b: number, c: bigint) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
